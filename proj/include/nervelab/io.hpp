#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "nervelab/complex.hpp"
#include "nervelab/covers.hpp"
#include "nervelab/homology.hpp"
#include "nervelab/presentation.hpp"

namespace nervelab {

using Json = nlohmann::ordered_json;

/// Checks a vertex label: nonempty, and any bracket or comma must belong to
/// a well-formed nested face label such as "[[1],[1,2]]".
void validate_label(const std::string& label);

/// {"name": ..., "facets": [[...], ...]}; facets in canonical order.
Json complex_to_json(const SimplicialComplex& k);

/// Accepts string or integer labels; integers are normalized to strings.
SimplicialComplex complex_from_json(const Json& j);

/// {"ambient": <complex>, "members": {"<index>": [[facet], ...], ...}}
Json cover_to_json(const SubcomplexCover& c);
SubcomplexCover cover_from_json(const Json& j, bool drop_empty = false);

/// {"ring": "Z", "reduced": false, "groups": [{"betti": n, "torsion": [..]}, ...]}
Json homology_to_json(const HomologyGroups& h);
Json group_to_json(const HomologyGroup& g);
Json presentation_to_json(const GroupPresentation& p);

Json read_json_file(const std::filesystem::path& path);
SimplicialComplex read_complex_file(const std::filesystem::path& path);
SubcomplexCover read_cover_file(const std::filesystem::path& path, bool drop_empty = false);

}  // namespace nervelab
