#pragma once

#include <nlohmann/json.hpp>

#include "gammoid/menger.hpp"

namespace gammoid {

using Json = nlohmann::json;

// Id-based encodings; each from_json inverts the matching to_json.
void to_json(Json& j, const Digraph& g);
void from_json(const Json& j, Digraph& g);
void to_json(Json& j, const Path& p);
void from_json(const Json& j, Path& p);
void to_json(Json& j, const Linkage& l);
void from_json(const Json& j, Linkage& l);
void to_json(Json& j, const Separator& s);
void from_json(const Json& j, Separator& s);

/// Vertex names for a list of ids.
[[nodiscard]] Json vertex_names(const Digraph& g, std::span<const VertexId> vertices);
/// A path with ids plus a readable "route" of vertex names.
[[nodiscard]] Json describe(const Digraph& g, const Path& p);

}  // namespace gammoid
