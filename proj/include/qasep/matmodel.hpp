#pragma once

#include <optional>
#include <vector>

#include "qasep/algebra.hpp"
#include "qasep/functionals.hpp"

namespace qasep {

/// Floating-point boundary matrix model (infinite bidiagonal/diagonal
/// matrices truncated at `trunc`).
///
/// The raw vector components w_k, v_k overflow/underflow doubles long before
/// useful truncations (w_k grows like q^{-k^2/2}); only the mixed products
/// stay bounded. All evaluations therefore run in the v-scaled row
/// representation r_k = (W * X)_k * v_k, which is algebraically identical to
/// the left-to-right matrix product.
class MatModel {
public:
    MatModel(double a, double b, double c, double d, const Rat& q, int trunc);

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }
    const Rat& q() const { return q_; }
    int trunc() const { return trunc_; }
    double theta() const;

    /// <W| X |V> for a word over D/E/d/e, association fixed as
    /// ((<W| M_1) M_2) ... |V>. TruncationError when the term tail of the
    /// final sum does not decay.
    double wxv(const Word& word) const;

    /// Smallest m <= trunc with a*c*q^m = 1 within float tolerance.
    std::optional<int> finite_index(double tol = 1e-12) const;

    /// Max relative entrywise residual of DE - qED - D - E on the top-left
    /// (trunc-1) x (trunc-1) block.
    double relation_residual() const;

    /// Max relative componentwise residual of the two boundary recursions
    /// (<W|e against theta(c+d)<W| - cd<W|d, and e|V> against
    /// (theta(a+b)|V> - d|V>)/(ab)) over the first trunc-1 components.
    double boundary_residual() const;

    struct Gap {
        double measured;
        double predicted;
    };

    /// Difference of the two association orders of <W|e|V>, against the
    /// closed-form limit -(theta/a)(ac, ad; q)_inf / (q, qa/b; q)_inf.
    Gap associativity_gap() const;

private:
    double ediag(int k) const;
    double ddiag(int k) const;

    double a_, b_, c_, d_;
    Rat q_;
    double qd_;
    double theta2_;
    int trunc_;
    std::vector<double> s_;  // s_[k] = w_k v_k, k = 1..trunc+1
    std::vector<double> u_;  // u_[k] = w_{k+1} v_k
    std::vector<double> vr_; // vr_[k] = v_k / v_{k+1}
};

/// Exact-rational variant, used for the terminating case a c q^m = 1 where
/// the model truncates to an (m+1)-dimensional one.
class ExactMatModel {
public:
    ExactMatModel(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& q, int trunc);

    const Rat& q() const { return q_; }
    int trunc() const { return trunc_; }
    const std::vector<Rat>& w() const { return w_; }
    const std::vector<Rat>& v() const { return v_; }

    /// Exact <W| X |V> for a word over D/E (each letter contributes a factor
    /// theta^2, so the value is rational).
    Rat wxv(const Word& word) const;

    std::optional<int> finite_index() const; // exact scan for a c q^m = 1

    /// DE - qED = D + E, exactly, on the top-left (trunc-1) block.
    bool relation_holds() const;

    /// (b d q^{-m}; q)_m / (b c; q)_m for the terminating index m.
    /// ModelError when it vanishes (singular bd in {q..q^m}; untested regime).
    Rat normalizer() const;

private:
    Rat ediag(int k) const;
    Rat ddiag(int k) const;

    Rat a_, b_, c_, d_, q_, theta2_;
    int trunc_;
    std::vector<Rat> w_, v_; // 1-based in w_[k-1]
};

/// <W|X|V> = normalizer * phi_0[X] for the terminating exact model, checked
/// exactly. The phi_0 table must come from the same (a, b, c, d, q).
bool finite_model_check(const ExactMatModel& model, const PhiTable& phi0, const Word& word);

} // namespace qasep
