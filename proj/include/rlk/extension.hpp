#pragma once

#include <string>
#include <vector>

#include "rlk/incidence.hpp"

namespace rlk {

enum class LayerKind { Perverse, MHM };

/// Nodewise extension coefficient layer: Q^r with one labeled generator
/// per node and a nonzero diagonal change-of-generator scale.
struct ExtensionLayer {
    LayerKind kind = LayerKind::Perverse;
    int r = 0;
    std::vector<std::string> generator_labels;
    RationalVector scale;

    static ExtensionLayer perverse(int r);
    static ExtensionLayer mhm(int r);
    static ExtensionLayer scaled(LayerKind kind, RationalVector scale);

    void validate() const;

    friend bool operator==(const ExtensionLayer&, const ExtensionLayer&) = default;
};

/// User-supplied nodewise coefficient vector in a layer's generators. The
/// toolkit checks the structure theorems on it; it never derives the
/// coefficients from geometry.
struct CorrectedClass {
    ExtensionLayer layer;
    RationalVector components;

    void validate() const;

    friend bool operator==(const CorrectedClass&, const CorrectedClass&) = default;
};

/// Invertible diagonal identification of MHM generators with perverse ones.
struct RealizationMap {
    ExtensionLayer source;  // MHM
    ExtensionLayer target;  // Perverse
    RationalVector diagonal;

    void validate() const;
    Matrix matrix() const;

    friend bool operator==(const RealizationMap&, const RealizationMap&) = default;
};

/// The incidence map into the layer: the alpha-th column sends the cycle
/// generator to sum_k a_{alpha k} scale_k eps_k. An r x |A| matrix; with
/// unit scales, the transpose of the incidence matrix.
Matrix gamma_map(const IncidenceDatum& d, const ExtensionLayer& layer);

/// Image of the incidence map inside the layer; dim = rank of the datum.
Subspace e_geom(const IncidenceDatum& d, const ExtensionLayer& layer);

/// True iff the class is constant on each incidence block.
bool is_incidence_compatible(const CorrectedClass& c, const IncidenceDatum& d);

/// Connected components of the co-incidence graph: nodes are joined when
/// some admissible cycle meets both. Nodes on no admissible cycle stay
/// singletons.
BlockPartition propagation_closure(const IncidenceDatum& d);

struct ClassCheckReport {
    bool propagation_ok = false;
    bool incidence_ok = false;
    bool in_e_geom = false;
    std::vector<std::string> warnings;
};

/// Runs the three structure checks on a class: constancy on propagation
/// blocks, constancy on incidence blocks, membership in the realized
/// subspace. Warns when the incidence blocks do not refine the propagation
/// blocks (then propagation cannot force blockwise equality).
ClassCheckReport check_corrected_class(const CorrectedClass& c, const IncidenceDatum& d);

/// Applies the realization diagonal to an MHM-layer class, landing in the
/// perverse layer.
CorrectedClass realize(const CorrectedClass& c, const RealizationMap& rat);

/// True iff the realized subspace is a line (the class is unique up to
/// scalar).
bool is_rigid(const IncidenceDatum& d);

/// The span of the incidence-weighted vanishing directions; coincides with
/// the geometric space, read in the delta basis.
Subspace vanishing_sector_span(const IncidenceDatum& d);

}  // namespace rlk
