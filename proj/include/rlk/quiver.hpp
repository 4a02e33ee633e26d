#pragma once

#include <string>
#include <vector>

#include "rlk/incidence.hpp"

namespace rlk {

enum class VertexKind { Bulk, Node, Block };

struct QuiverVertex {
    std::string id;
    VertexKind kind = VertexKind::Bulk;
    std::string label;

    friend bool operator==(const QuiverVertex&, const QuiverVertex&) = default;
};

struct QuiverArrow {
    std::string source;
    std::string target;

    friend bool operator==(const QuiverArrow&, const QuiverArrow&) = default;
};

/// Decategorified shadow: one bulk vertex coupled to local sector vertices
/// (per node, or per relation block), annotated with the dimension of the
/// admissible coupling space.
struct QuiverShadow {
    std::vector<QuiverVertex> vertices;
    std::vector<QuiverArrow> arrows;
    int coupling_dim = 0;
    std::vector<std::string> notes;

    void validate() const;

    friend bool operator==(const QuiverShadow&, const QuiverShadow&) = default;
};

/// Bulk plus one vertex per node; the coupling space is the free nodewise
/// one, so coupling_dim = r.
QuiverShadow node_quiver(const IncidenceDatum& d);

/// Bulk plus one vertex per relation block; coupling_dim = rank of the
/// incidence matrix, with a note when that drops below the block count.
QuiverShadow block_quiver(const IncidenceDatum& d);

/// True iff the coefficient system is constant on incidence blocks.
bool coupling_is_block_compatible(const RationalVector& c, const IncidenceDatum& d);

/// Deterministic Graphviz rendering; bulk is a doublecircle, sector
/// vertices are circles, and coupling_dim is a comment line.
std::string to_dot(const QuiverShadow& q);

}  // namespace rlk
