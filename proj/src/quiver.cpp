#include "rlk/quiver.hpp"

#include <set>
#include <sstream>

#include "rlk/errors.hpp"

namespace rlk {

void QuiverShadow::validate() const {
    int bulks = 0;
    bool nodes = false, blocks = false;
    std::set<std::string> ids;
    for (const QuiverVertex& v : vertices) {
        if (!ids.insert(v.id).second) throw ValueError("duplicate vertex id '" + v.id + "'");
        switch (v.kind) {
            case VertexKind::Bulk: ++bulks; break;
            case VertexKind::Node: nodes = true; break;
            case VertexKind::Block: blocks = true; break;
        }
    }
    if (bulks != 1) throw ValueError("a shadow has exactly one bulk vertex");
    if (nodes && blocks) throw ValueError("node and block vertices cannot coexist");
    for (const QuiverArrow& a : arrows)
        if (!ids.count(a.source) || !ids.count(a.target))
            throw ValueError("arrow endpoint references a missing vertex");
}

QuiverShadow node_quiver(const IncidenceDatum& d) {
    QuiverShadow q;
    q.vertices.push_back({"bulk", VertexKind::Bulk, "bulk"});
    for (int k = 0; k < d.node_count(); ++k) {
        const std::string id = "n" + std::to_string(k + 1);
        q.vertices.push_back({id, VertexKind::Node, d.node_labels[static_cast<size_t>(k)]});
        q.arrows.push_back({"bulk", id});
    }
    q.coupling_dim = d.node_count();
    q.validate();
    return q;
}

QuiverShadow block_quiver(const IncidenceDatum& d) {
    const BlockPartition blocks = incidence_blocks(d);
    QuiverShadow q;
    q.vertices.push_back({"bulk", VertexKind::Bulk, "bulk"});
    for (int b = 0; b < blocks.block_count(); ++b) {
        std::string label = "{";
        const auto& members = blocks.blocks()[static_cast<size_t>(b)];
        for (size_t i = 0; i < members.size(); ++i) {
            if (i) label += ",";
            label += d.node_labels[static_cast<size_t>(members[i])];
        }
        label += "}";
        const std::string id = "b" + std::to_string(b + 1);
        q.vertices.push_back({id, VertexKind::Block, label});
        q.arrows.push_back({"bulk", id});
    }
    q.coupling_dim = rank(d.matrix);
    if (q.coupling_dim < blocks.block_count())
        q.notes.push_back("coupling rank " + std::to_string(q.coupling_dim) +
                          " is below the block count " + std::to_string(blocks.block_count()) +
                          "; the datum is not block-adapted");
    q.validate();
    return q;
}

bool coupling_is_block_compatible(const RationalVector& c, const IncidenceDatum& d) {
    if (static_cast<int>(c.size()) != d.node_count())
        throw DimensionMismatch("coefficient count does not match node count");
    const BlockPartition blocks = incidence_blocks(d);
    for (const auto& block : blocks.blocks()) {
        const Rational& first = c[static_cast<size_t>(block.front())];
        for (int k : block)
            if (c[static_cast<size_t>(k)] != first) return false;
    }
    return true;
}

std::string to_dot(const QuiverShadow& q) {
    q.validate();
    std::ostringstream out;
    out << "digraph quiver_shadow {\n";
    out << "  // coupling_dim = " << q.coupling_dim << "\n";
    for (const std::string& note : q.notes) out << "  // " << note << "\n";
    for (const QuiverVertex& v : q.vertices)
        out << "  " << v.id << " [shape="
            << (v.kind == VertexKind::Bulk ? "doublecircle" : "circle") << ", label=\"" << v.label
            << "\"];\n";
    for (const QuiverArrow& a : q.arrows) out << "  " << a.source << " -> " << a.target << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace rlk
