#include "salbp/io_util.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace salbp {

void atomic_write_file(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write failed for '" + tmp + "'");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename '" + tmp + "' to '" + path + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

namespace {

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace

std::optional<GreedyWeights> lookup_kappa(const std::string& table_text,
                                          const std::string& instance_name) {
    const std::string needle = lower(instance_name);
    std::istringstream in(table_text);
    std::string graph;
    double k1, k2;
    while (in >> graph >> k1 >> k2) {
        const std::string key = lower(graph);
        if (needle.rfind(key, 0) == 0 || key.rfind(needle, 0) == 0)
            return GreedyWeights{k1, k2};
    }
    return std::nullopt;
}

const std::string& default_kappa_table() {
    static const std::string table =
        "Arcus1 0.0 1.0\n"
        "Arcus2 -0.5 0.9\n"
        "Barthol2 0.0 1.0\n"
        "Barthold 0.0 1.0\n"
        "Buxey 0.0 1.0\n"
        "Gunther -0.4 0.8\n"
        "Hahn 0.0 1.0\n"
        "Kilbridge 0.0 1.0\n"
        "Lutz1 -0.1 0.9\n"
        "Lutz2 -0.1 0.9\n"
        "Lutz3 0.0 1.0\n"
        "Mukherje 0.0 1.0\n"
        "Sawyer 0.0 1.0\n"
        "Scholl 0.0 1.0\n"
        "Tonge -0.1 0.2\n"
        "Warnecke 0.0 1.0\n"
        "Wee-Mag 0.0 1.0\n";
    return table;
}

}  // namespace salbp
