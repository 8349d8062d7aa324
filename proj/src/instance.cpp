#include "salbp/instance.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

namespace salbp {

namespace {

const char* kind_name(ParseError::Kind k) {
    switch (k) {
        case ParseError::Kind::SyntaxError: return "SyntaxError";
        case ParseError::Kind::NonPositiveTime: return "NonPositiveTime";
        case ParseError::Kind::BadArcEndpoint: return "BadArcEndpoint";
        case ParseError::Kind::CycleDetected: return "CycleDetected";
    }
    return "ParseError";
}

std::string format_error(ParseError::Kind k, int line, const std::string& what) {
    std::ostringstream os;
    os << kind_name(k);
    if (line > 0) os << " at line " << line;
    os << ": " << what;
    return os.str();
}

// Strips one trailing '\r' and trailing whitespace; anything else unexpected
// is the caller's problem.
std::string trim_right(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.pop_back();
    return s;
}

bool parse_int_strict(const std::string& s, long long& out) {
    if (s.empty()) return false;
    size_t pos = 0;
    bool neg = false;
    if (s[0] == '-') {
        neg = true;
        pos = 1;
        if (s.size() == 1) return false;
    }
    long long v = 0;
    for (; pos < s.size(); ++pos) {
        if (s[pos] < '0' || s[pos] > '9') return false;
        v = v * 10 + (s[pos] - '0');
        if (v > 2000000000LL) return false;
    }
    out = neg ? -v : v;
    return true;
}

}  // namespace

ParseError::ParseError(Kind k, int line_no, const std::string& what)
    : std::runtime_error(format_error(k, line_no, what)), kind(k), line(line_no) {}

Instance::Instance(std::string name, std::vector<int> times,
                   std::vector<std::pair<int, int>> arcs)
    : name_(std::move(name)), times_(std::move(times)), arcs_(std::move(arcs)) {
    const int n = static_cast<int>(times_.size());
    if (n < 1)
        throw ParseError(ParseError::Kind::SyntaxError, 0, "instance has no tasks");
    for (int i = 0; i < n; ++i) {
        if (times_[i] <= 0)
            throw ParseError(ParseError::Kind::NonPositiveTime, 0,
                             "task " + std::to_string(i + 1) + " has non-positive time");
        max_time_ = std::max(max_time_, times_[i]);
        total_time_ += times_[i];
    }
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());

    direct_pred_.assign(n, {});
    direct_succ_.assign(n, {});
    for (auto [i, j] : arcs_) {
        if (i < 1 || i > n || j < 1 || j > n)
            throw ParseError(ParseError::Kind::BadArcEndpoint, 0,
                             "arc (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") outside 1.." + std::to_string(n));
        if (i == j)
            throw ParseError(ParseError::Kind::CycleDetected, 0,
                             "self-loop at task " + std::to_string(i));
        direct_succ_[i - 1].push_back(j);
        direct_pred_[j - 1].push_back(i);
    }

    // Kahn topological order; doubles as the cycle check.
    std::vector<int> indeg(n, 0), order;
    order.reserve(n);
    for (int v = 0; v < n; ++v) indeg[v] = static_cast<int>(direct_pred_[v].size());
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) order.push_back(v);
    for (size_t head = 0; head < order.size(); ++head) {
        for (int s : direct_succ_[order[head]])
            if (--indeg[s - 1] == 0) order.push_back(s - 1);
    }
    if (static_cast<int>(order.size()) != n)
        throw ParseError(ParseError::Kind::CycleDetected, 0, "precedence graph is cyclic");

    // Transitive closure along reverse topological order: Suc^all_i is the
    // union of {j} ∪ Suc^all_j over direct successors j.
    succ_all_.assign(n, {});
    std::vector<char> mark(n, 0);
    for (int idx = n - 1; idx >= 0; --idx) {
        const int v = order[idx];
        std::vector<int> acc;
        for (int s : direct_succ_[v]) {
            if (!mark[s - 1]) {
                mark[s - 1] = 1;
                acc.push_back(s);
            }
            for (int t : succ_all_[s - 1]) {
                if (!mark[t - 1]) {
                    mark[t - 1] = 1;
                    acc.push_back(t);
                }
            }
        }
        for (int t : acc) mark[t - 1] = 0;
        std::sort(acc.begin(), acc.end());
        succ_all_[v] = std::move(acc);
        max_succ_all_ = std::max(max_succ_all_, static_cast<int>(succ_all_[v].size()));
    }

    pred_sets_.assign(n, {});
    for (int v = 1; v <= n; ++v)
        for (int t : succ_all_[v - 1]) pred_sets_[t - 1].push_back(v);
    // pred_sets_ rows come out sorted because v runs ascending.
}

Instance parse_instance(std::istream& in, const std::string& name) {
    std::string raw;
    int line_no = 0;

    auto next_line = [&](std::string& out) -> bool {
        if (!std::getline(in, raw)) return false;
        ++line_no;
        out = trim_right(raw);
        return true;
    };

    std::string line;
    if (!next_line(line))
        throw ParseError(ParseError::Kind::SyntaxError, 1, "missing task count");
    long long n = 0;
    if (!parse_int_strict(line, n) || n < 1)
        throw ParseError(ParseError::Kind::SyntaxError, line_no,
                         "expected positive task count, got '" + line + "'");

    std::vector<int> times(static_cast<size_t>(n));
    for (long long i = 0; i < n; ++i) {
        if (!next_line(line))
            throw ParseError(ParseError::Kind::SyntaxError, line_no + 1,
                             "missing time for task " + std::to_string(i + 1));
        long long t = 0;
        if (!parse_int_strict(line, t))
            throw ParseError(ParseError::Kind::SyntaxError, line_no,
                             "expected integer task time, got '" + line + "'");
        if (t <= 0)
            throw ParseError(ParseError::Kind::NonPositiveTime, line_no,
                             "task " + std::to_string(i + 1) + " has time " + std::to_string(t));
        times[static_cast<size_t>(i)] = static_cast<int>(t);
    }

    std::vector<std::pair<int, int>> arcs;
    bool terminated = false;
    while (next_line(line)) {
        if (line.empty() && in.eof()) break;  // single trailing newline
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ParseError(ParseError::Kind::SyntaxError, line_no,
                             "expected 'i,j' arc line, got '" + line + "'");
        long long a = 0, b = 0;
        if (!parse_int_strict(line.substr(0, comma), a) ||
            !parse_int_strict(line.substr(comma + 1), b))
            throw ParseError(ParseError::Kind::SyntaxError, line_no,
                             "expected 'i,j' arc line, got '" + line + "'");
        if (a == -1 && b == -1) {
            terminated = true;
            break;
        }
        if (a < 1 || a > n || b < 1 || b > n)
            throw ParseError(ParseError::Kind::BadArcEndpoint, line_no,
                             "arc endpoint outside 1.." + std::to_string(n));
        arcs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    if (!terminated)
        throw ParseError(ParseError::Kind::SyntaxError, line_no,
                         "missing '-1,-1' terminator");
    while (next_line(line)) {
        if (!line.empty())
            throw ParseError(ParseError::Kind::SyntaxError, line_no,
                             "unexpected content after terminator: '" + line + "'");
    }

    try {
        return Instance(name, std::move(times), std::move(arcs));
    } catch (const ParseError&) {
        throw;  // construction errors (cycles etc.) already carry a message
    }
}

Instance parse_instance_text(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    return parse_instance(in, name);
}

Instance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(ParseError::Kind::SyntaxError, 0, "cannot open '" + path + "'");
    auto slash = path.find_last_of("/\\");
    std::string stem = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = stem.find_last_of('.');
    if (dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
    return parse_instance(in, stem);
}

std::string serialize_instance(const Instance& instance) {
    std::ostringstream os;
    os << instance.n() << "\n";
    for (int t : instance.times()) os << t << "\n";
    for (auto [i, j] : instance.arcs()) os << i << "," << j << "\n";
    os << "-1,-1\n";
    return os.str();
}

Instance reverse_instance(const Instance& instance) {
    std::vector<std::pair<int, int>> rev;
    rev.reserve(instance.arcs().size());
    for (auto [i, j] : instance.arcs()) rev.emplace_back(j, i);
    return Instance(instance.name(), instance.times(), std::move(rev));
}

int starting_cycle_time(const ProblemSpec& spec) {
    const Instance& ins = *spec.instance;
    long long per_station = (ins.total_time() + spec.m - 1) / spec.m;
    return static_cast<int>(std::max<long long>(ins.max_time(), per_station));
}

std::string export_ip_model(const ProblemSpec& spec) {
    const Instance& ins = *spec.instance;
    const int n = ins.n();
    const int m = spec.m;
    std::ostringstream os;

    auto var = [](int i, int s) {
        return "x_" + std::to_string(i) + "_" + std::to_string(s);
    };

    os << "Minimize\n obj: z\nSubject To\n";
    for (int i = 1; i <= n; ++i) {
        os << " assign_" << i << ": ";
        for (int s = 1; s <= m; ++s) {
            if (s > 1) os << " + ";
            os << var(i, s);
        }
        os << " = 1\n";
    }
    int row = 0;
    for (auto [i, j] : ins.arcs()) {
        os << " prec_" << ++row << ": ";
        for (int s = 1; s <= m; ++s) {
            if (s > 1) os << " + ";
            os << s << " " << var(i, s);
        }
        for (int s = 1; s <= m; ++s) os << " - " << s << " " << var(j, s);
        os << " <= 0\n";
    }
    for (int s = 1; s <= m; ++s) {
        os << " cap_" << s << ": ";
        for (int i = 1; i <= n; ++i) {
            if (i > 1) os << " + ";
            os << ins.time(i) << " " << var(i, s);
        }
        os << " - z <= 0\n";
    }
    os << "Binary\n";
    for (int i = 1; i <= n; ++i)
        for (int s = 1; s <= m; ++s) os << " " << var(i, s) << "\n";
    os << "End\n";
    return os.str();
}

}  // namespace salbp
