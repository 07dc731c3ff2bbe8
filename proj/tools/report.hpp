#pragma once

#include "homx/classify.hpp"
#include "homx/critical.hpp"
#include "homx/search.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace homx::cli {

using Json = nlohmann::ordered_json;

std::string op_symbol(std::strong_ordering o);

Json to_json(const TargetGraph& h);
Json to_json(const RegimeReport& r);
Json to_json(const PowerTerm& t, std::size_t n);
Json to_json(const Bound& b);
Json to_json(const Evaluated& e);
Json to_json(const ArgMax& a);
Json to_json(const SearchVerdict& v);
Json to_json(const TwoRegularVerdict& v);
Json to_json(const EarDecomposition& d);

/// One CSV record with RFC 4180 quoting.
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);
/// Header, one row per evaluated graph, and a `truncated` footer when cut short.
void write_rows_csv(std::ostream& out, const std::vector<Evaluated>& rows, bool truncated);

}  // namespace homx::cli
