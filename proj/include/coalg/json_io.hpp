#pragma once

#include <string>

#include <json.hpp>

#include "coalg/binary_system.hpp"
#include "coalg/coalgebra.hpp"
#include "coalg/graph_coalgebra.hpp"
#include "coalg/group.hpp"
#include "coalg/realization.hpp"
#include "coalg/report.hpp"

namespace coalg {

// nlohmann::json keeps object keys sorted, which is what makes every file
// this module writes byte-identical across runs.
using json = nlohmann::json;

// field elements <-> coefficient arrays like [1,0,1]
json field_elem_to_json(const FieldElem& a);
FieldElem field_elem_from_json(const Field& f, const json& j);

// {"vertices": [...], "edges": [["u","v"], ...]}
json digraph_to_json(const Digraph& g);
Digraph digraph_from_json(const json& j);

// {"vertices": [...], "labels": [...], "relations": {"l": [["u","v"], ...]}}
json system_to_json(const BinarySystem& s);
BinarySystem system_from_json(const json& j);

// {"vertices": [...], "edges": [["u","v"], ...]} with u < v once per edge
json simple_to_json(const SimpleGraph& g);
SimpleGraph simple_from_json(const json& j);

// {"basis": [...], "comult": {"x": [["y","z",[c...]], ...]},
//  "counit": {"x": [c...], ...}, "field": "p^n"}
json coalgebra_to_json(const Coalgebra& c);
Coalgebra coalgebra_from_json(const json& j, long long field_cap = Caps{}.field_size);

// {"degree": m, "generators": [[...], ...]}
json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j, long long cap = Caps{}.group_close);

// {"gen_images": [[...], ...], "group": {...}, "v_size": k}
json permrep_to_json(const PermRep& rep);
PermRep permrep_from_json(const json& j, long long cap = Caps{}.group_close);

// {"lambda": {"u->v": [c...]}, "mu": {...}, "sigma": [...]}
json structured_to_json(const GraphCoalgebra& gc, const StructuredAut& f);
StructuredAut structured_from_json(const GraphCoalgebra& gc, const json& j);

// {"checks": [{"detail","name","status"}, ...], "ok": bool}
json report_to_json(const Report& r);

// Rebuilds the digraph a coalgebra file came from and checks the file is
// exactly its path coalgebra (same basis names and order). ParseError when
// the layout does not match.
Digraph digraph_from_coalgebra(const Coalgebra& c);

// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string dump_json(const json& j);

json parse_json_text(const std::string& text, const std::string& what);
json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace coalg
