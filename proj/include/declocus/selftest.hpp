#ifndef DECLOCUS_SELFTEST_HPP
#define DECLOCUS_SELFTEST_HPP

#include <cstdint>
#include <optional>

#include "json_io.hpp"

namespace declocus {

// Built-in consistency checks on the normal form of one orbit (or all 26):
// table reproduction, a full game, locus agreement across strategies, and the
// tangential properties for orbit 5. The summary has "passed" at top level.
Json run_selftest(std::optional<int> orbit, std::uint64_t seed);

}  // namespace declocus

#endif
