#ifndef DECLOCUS_JSON_IO_HPP
#define DECLOCUS_JSON_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "classify.hpp"
#include "game.hpp"
#include "locus.hpp"
#include "wstate.hpp"

namespace declocus {

using Json = nlohmann::json;

// Tensor document: {"shape": [..], "entries": [{"idx": [..], "value": "p/q"}], "name": ".."}.
// Indices are 0-based; omitted entries are zero.
Tensor<Rational> parse_tensor(std::string_view text);
std::string serialize_tensor(const Tensor<Rational>& t, const std::optional<std::string>& name = std::nullopt);

// Rank-one document: {"factors": [["p/q", ..], ..]}.
RankOne<Rational> parse_rank_one(std::string_view text);

Json rank_one_json(const RankOne<Rational>& p);
Json report_json(const OrbitSummary& s);
Json verdict_json(const LocusVerdict& v);
Json decomposition_json(const Decomposition& d);
Json transcript_json(const GameState& s, std::uint64_t seed);
Json error_json(const std::string& code, const std::string& message);

}  // namespace declocus

#endif
