#pragma once

#include <string>
#include <utility>
#include <vector>

#include <qmat/error.hpp>
#include <qmat/hecke_algebra.hpp>
#include <qmat/hecke_operator.hpp>
#include <qmat/matrix.hpp>

namespace qmat {

// The (anti)symmetrizer projectors on W*^{(x)n} (x) V^{(x)n} built from the
// Casimir element of H (x) H: the full operator
//
//   sum_w q^{-l(w)} a(T_w) (x) rho_R(T_{w^{-1}})
//
// where a = sigma_S (transposed lift of S' = -qS^{-1}) gives Phi^n and
// a = tau_S (transposed lift of S itself) gives Psi^n.  The lambda
// component is cut out by a(F_lambda) (x) rho(F_lambda); it squares to
// (d_lambda / k_lambda) times itself, and weighting each component by
// k_lambda / d_lambda yields the idempotent normalized projector.
template <ScalarField K>
struct ProjectorBlock {
    Partition shape;
    Matrix<K> component;
    K scale = K::zero();  // d_lambda / k_lambda
    std::size_t rank = 0;
};

template <ScalarField K>
struct ProjectorBundle {
    int n = 0;
    std::string kind;  // "phi" or "psi"
    Matrix<K> full;
    Matrix<K> normalized;
    std::vector<ProjectorBlock<K>> blocks;
};

namespace detail {

template <ScalarField K>
ProjectorBundle<K> build_projector_bundle(const HeckeOp<K>& dual_op,
                                          const HeckeOp<K>& op, int n,
                                          std::string kind) {
    require(dual_op.q == op.q, "ParameterMismatch",
            "projector factors must share the Hecke parameter");
    TensorRep<K> arep(dual_op, n);
    TensorRep<K> brep(op, n);
    const PermTable& tab = arep.perms();
    const std::size_t da = arep.dim();
    const std::size_t db = brep.dim();

    ProjectorBundle<K> bundle;
    bundle.n = n;
    bundle.kind = std::move(kind);
    bundle.full = Matrix<K>(da * db, da * db);
    for (PermIndex w = 0; w < tab.size; ++w) {
        Matrix<K> a = arep.basis_matrix(w).transpose();
        Matrix<K> b = brep.basis_matrix(tab.inverse[w]);
        K s = scalar_pow(op.q, -tab.length[w]);
        Matrix<K> term = Matrix<K>::kronecker(a, b);
        for (std::size_t i = 0; i < term.rows(); ++i)
            for (std::size_t j = 0; j < term.cols(); ++j)
                if (!term.at(i, j).is_zero())
                    bundle.full.at(i, j) = bundle.full.at(i, j) + s * term.at(i, j);
    }

    bundle.normalized = Matrix<K>(da * db, da * db);
    auto blocks = hecke_blocks<K>(n, op.q);
    for (const HeckeBlock<K>& hb : *blocks) {
        ProjectorBlock<K> pb;
        pb.shape = hb.shape;
        pb.scale = hb.z_eigenvalue;
        Matrix<K> cut = Matrix<K>::kronecker(
            arep.elem_matrix(hb.idempotent).transpose(),
            brep.elem_matrix(hb.idempotent));
        pb.component = cut * bundle.full;
        pb.rank = pb.component.rank();
        K weight = hb.z_eigenvalue.inverse();  // k_lambda / d_lambda
        for (std::size_t i = 0; i < bundle.normalized.rows(); ++i)
            for (std::size_t j = 0; j < bundle.normalized.cols(); ++j)
                if (!pb.component.at(i, j).is_zero())
                    bundle.normalized.at(i, j) =
                        bundle.normalized.at(i, j) + weight * pb.component.at(i, j);
        bundle.blocks.push_back(std::move(pb));
    }
    return bundle;
}

}  // namespace detail

template <ScalarField K>
ProjectorBundle<K> build_phi(const HeckeOp<K>& S, const HeckeOp<K>& R, int n) {
    return detail::build_projector_bundle(prime_operator(S), R, n, "phi");
}

template <ScalarField K>
ProjectorBundle<K> build_psi(const HeckeOp<K>& S, const HeckeOp<K>& R, int n) {
    return detail::build_projector_bundle(S, R, n, "psi");
}

}  // namespace qmat
