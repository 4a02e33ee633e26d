#include "rlk/extension.hpp"

#include <numeric>
#include <set>

#include "rlk/errors.hpp"

namespace rlk {

namespace {

std::vector<std::string> default_labels(LayerKind kind, int r) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(r));
    const char* stem = kind == LayerKind::MHM ? "epsH_" : "eps_";
    for (int k = 1; k <= r; ++k) labels.push_back(stem + std::to_string(k));
    return labels;
}

// Union-find over node indices.
class Components {
public:
    explicit Components(int n) : parent_(static_cast<size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[static_cast<size_t>(x)] != x) {
            parent_[static_cast<size_t>(x)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
            x = parent_[static_cast<size_t>(x)];
        }
        return x;
    }
    void join(int a, int b) { parent_[static_cast<size_t>(find(a))] = find(b); }

private:
    std::vector<int> parent_;
};

bool constant_on_blocks(const RationalVector& v, const BlockPartition& p) {
    for (const auto& block : p.blocks()) {
        const Rational& first = v[static_cast<size_t>(block.front())];
        for (int i : block)
            if (v[static_cast<size_t>(i)] != first) return false;
    }
    return true;
}

}  // namespace

ExtensionLayer ExtensionLayer::perverse(int r) {
    return scaled(LayerKind::Perverse, RationalVector(static_cast<size_t>(r), Rational(1)));
}

ExtensionLayer ExtensionLayer::mhm(int r) {
    return scaled(LayerKind::MHM, RationalVector(static_cast<size_t>(r), Rational(1)));
}

ExtensionLayer ExtensionLayer::scaled(LayerKind kind, RationalVector scale) {
    ExtensionLayer layer;
    layer.kind = kind;
    layer.r = static_cast<int>(scale.size());
    layer.generator_labels = default_labels(kind, layer.r);
    layer.scale = std::move(scale);
    layer.validate();
    return layer;
}

void ExtensionLayer::validate() const {
    if (static_cast<int>(generator_labels.size()) != r)
        throw DimensionMismatch("generator label count does not match r");
    if (static_cast<int>(scale.size()) != r)
        throw DimensionMismatch("scale length does not match r");
    for (const Rational& s : scale)
        if (s.is_zero()) throw ValueError("layer scale entries must be nonzero");
    std::set<std::string> distinct(generator_labels.begin(), generator_labels.end());
    if (distinct.size() != generator_labels.size())
        throw ValueError("duplicate generator label");
}

void CorrectedClass::validate() const {
    layer.validate();
    if (static_cast<int>(components.size()) != layer.r)
        throw DimensionMismatch("class component count does not match layer");
}

void RealizationMap::validate() const {
    source.validate();
    target.validate();
    if (source.kind != LayerKind::MHM || target.kind != LayerKind::Perverse)
        throw LayerMismatch("realization runs from the MHM layer to the perverse layer");
    if (source.r != target.r) throw DimensionMismatch("realization endpoints differ in size");
    if (static_cast<int>(diagonal.size()) != source.r)
        throw DimensionMismatch("realization diagonal length does not match r");
    for (const Rational& x : diagonal)
        if (x.is_zero()) throw ValueError("realization diagonal must be invertible");
}

Matrix RealizationMap::matrix() const {
    Matrix m(source.r, source.r);
    for (int k = 0; k < source.r; ++k) m.at(k, k) = diagonal[static_cast<size_t>(k)];
    return m;
}

Matrix gamma_map(const IncidenceDatum& d, const ExtensionLayer& layer) {
    if (layer.r != d.node_count())
        throw DimensionMismatch("layer size does not match node count");
    Matrix g(d.node_count(), d.cycle_count());
    for (int alpha = 0; alpha < d.cycle_count(); ++alpha)
        for (int k = 0; k < d.node_count(); ++k)
            g.at(k, alpha) = d.matrix.at(alpha, k) * layer.scale[static_cast<size_t>(k)];
    return g;
}

Subspace e_geom(const IncidenceDatum& d, const ExtensionLayer& layer) {
    return image(gamma_map(d, layer));
}

bool is_incidence_compatible(const CorrectedClass& c, const IncidenceDatum& d) {
    if (c.layer.r != d.node_count())
        throw DimensionMismatch("class size does not match node count");
    return constant_on_blocks(c.components, incidence_blocks(d));
}

BlockPartition propagation_closure(const IncidenceDatum& d) {
    const AdmissibilityReport adm = is_geometrically_admissible(d);
    Components comp(d.node_count());
    for (int alpha = 0; alpha < d.cycle_count(); ++alpha) {
        if (!adm.cycles[static_cast<size_t>(alpha)].admissible) continue;
        int anchor = -1;
        for (int k = 0; k < d.node_count(); ++k) {
            if (d.matrix.at(alpha, k).is_zero()) continue;
            if (anchor < 0)
                anchor = k;
            else
                comp.join(anchor, k);
        }
    }
    std::vector<int> assignment(static_cast<size_t>(d.node_count()));
    for (int k = 0; k < d.node_count(); ++k) assignment[static_cast<size_t>(k)] = comp.find(k);
    return BlockPartition::from_assignment(assignment);
}

ClassCheckReport check_corrected_class(const CorrectedClass& c, const IncidenceDatum& d) {
    c.validate();
    if (c.layer.r != d.node_count())
        throw DimensionMismatch("class size does not match node count");
    ClassCheckReport report;
    const BlockPartition inc = incidence_blocks(d);
    const BlockPartition prop = propagation_closure(d);
    report.propagation_ok = constant_on_blocks(c.components, prop);
    report.incidence_ok = constant_on_blocks(c.components, inc);
    report.in_e_geom = e_geom(d, c.layer).contains(c.components);
    if (!inc.refines(prop))
        report.warnings.push_back(
            "incidence blocks " + inc.str() + " are not refined into propagation blocks " +
            prop.str() + "; cycle propagation does not force blockwise equality here");
    return report;
}

CorrectedClass realize(const CorrectedClass& c, const RealizationMap& rat) {
    rat.validate();
    c.validate();
    if (!(c.layer == rat.source))
        throw LayerMismatch("class does not live in the realization source layer");
    CorrectedClass out;
    out.layer = rat.target;
    out.components = rat.matrix().apply(c.components);
    return out;
}

bool is_rigid(const IncidenceDatum& d) {
    return e_geom(d, ExtensionLayer::perverse(d.node_count())).dim() == 1;
}

Subspace vanishing_sector_span(const IncidenceDatum& d) { return geometric_space(d); }

}  // namespace rlk
