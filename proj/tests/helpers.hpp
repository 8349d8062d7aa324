#ifndef SALBP_TESTS_HELPERS_HPP
#define SALBP_TESTS_HELPERS_HPP

#include <string>

#include "salbp/instance.hpp"

namespace salbp::testing {

// 4-task diamond: 1 -> {2,3} -> 4, times 2,3,2,4.
inline const std::string kToyText = "4\n2\n3\n2\n4\n1,2\n1,3\n2,4\n3,4\n-1,-1\n";

inline Instance toy_instance() { return parse_instance_text(kToyText, "TOY"); }

}  // namespace salbp::testing

#endif
