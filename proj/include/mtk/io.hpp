#pragma once

#include <json.hpp>
#include <string>
#include <variant>

#include "mtk/galois.hpp"
#include "mtk/groups.hpp"
#include "mtk/premodular.hpp"

namespace mtk {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& path);
Json cyclo_to_json(const CycloNum& x);
CycloNum cyclo_from_json(const Json& j, const std::string& path);
Json root_to_json(const RootOfUnity& r);
RootOfUnity root_from_json(const Json& j, const std::string& path);
Json matrix_to_json(const CycloMatrix& m);
CycloMatrix matrix_from_json(const Json& j, const std::string& path);

Json premodular_to_json(const PreModularData& d);
/// Schema check, then every premodular invariant. Throws SchemaError with a
/// JSON path or InvariantError naming the invariant.
PreModularData premodular_from_json(const Json& payload, const std::string& path = "payload");

Json group_to_json(const GroupData& g);
GroupData group_from_json(const Json& payload, const std::string& path = "payload");

/// {"format_version": 1, "kind": ..., "payload": ...}
Json wrap(const std::string& kind, Json payload);
Json to_document(const PreModularData& d);
Json to_document(const GroupData& g);

/// Sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);

using DataObject = std::variant<PreModularData, GroupData>;

DataObject parse_document(const Json& doc);
DataObject load(const std::string& path);
PreModularData load_premodular(const std::string& path);
GroupData load_group(const std::string& path);
void save(const PreModularData& d, const std::string& path);
void save(const GroupData& g, const std::string& path);
void write_text(const std::string& path, const std::string& text);
Json read_json(const std::string& path);

/// Optional condensation inputs: {"sz_matrices": {label: matrix},
/// "untwisted_stabilizers": {label: [labels]}}; labels by name or index.
CondenseOptions condense_options_from_json(const Json& j, const PreModularData& d, const std::string& path = "");
Json fixed_point_matrices_to_json(const FixedPointMatrices& m, const PreModularData& d);

/// Exact value with a float rendering, for reports.
Json cyclo_report(const CycloNum& x);

}  // namespace mtk
