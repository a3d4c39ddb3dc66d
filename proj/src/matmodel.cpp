#include "qasep/matmodel.hpp"

#include <algorithm>
#include <cmath>

namespace qasep {

namespace {

void validate_model_params(double a, double b, const Rat& q, int trunc) {
    if (!(a > 0)) throw ParameterError("matrix model needs a > 0");
    if (b == 0) throw ParameterError("degenerate model: b = 0 collapses |V>");
    if (!(b < 0)) throw ParameterError("matrix model needs b < 0");
    if (q <= 0 || q >= 1) throw ParameterError("matrix model needs 0 < q < 1");
    if (trunc < 2) throw ParameterError("trunc must be >= 2");
}

double qpoch_inf(double x, double q) {
    double acc = 1.0;
    double f = x;
    for (int i = 0; i < 10000 && std::fabs(f) > 1e-16; ++i) {
        acc *= 1.0 - f;
        f *= q;
    }
    return acc;
}

} // namespace

MatModel::MatModel(double a, double b, double c, double d, const Rat& q, int trunc)
    : a_(a), b_(b), c_(c), d_(d), q_(q), qd_(rat_to_double(q)), trunc_(trunc) {
    validate_model_params(a, b, q, trunc);
    theta2_ = 1.0 / (1.0 - qd_);
    s_.assign(static_cast<std::size_t>(trunc_) + 2, 0.0);
    u_.assign(static_cast<std::size_t>(trunc_) + 2, 0.0);
    vr_.assign(static_cast<std::size_t>(trunc_) + 2, 0.0);
    // w_{k+1}/w_k = c + d - acd q^{k-1} - 1/(a q^{k-1}),
    // v_{k+1}/v_k = ab / (a(1-q^k) + b(1-q^{-k})).
    double qk1 = 1.0;      // q^{k-1}
    double qk = qd_;       // q^k
    double qmk = 1.0 / qd_; // q^{-k}
    s_[1] = 1.0;
    for (int k = 1; k <= trunc_; ++k) {
        double wr = c_ + d_ - a_ * c_ * d_ * qk1 - 1.0 / (a_ * qk1);
        double vnext_over_v = a_ * b_ / (a_ * (1.0 - qk) + b_ * (1.0 - qmk));
        u_[static_cast<std::size_t>(k)] = s_[static_cast<std::size_t>(k)] * wr;
        vr_[static_cast<std::size_t>(k)] = 1.0 / vnext_over_v;
        s_[static_cast<std::size_t>(k) + 1] = u_[static_cast<std::size_t>(k)] * vnext_over_v;
        if (!std::isfinite(s_[static_cast<std::size_t>(k) + 1]) ||
            !std::isfinite(vr_[static_cast<std::size_t>(k)]))
            throw TruncationError("model sequences left the double range; reduce trunc");
        qk1 *= qd_;
        qk *= qd_;
        qmk /= qd_;
    }
}

double MatModel::theta() const { return std::sqrt(theta2_); }

double MatModel::ediag(int k) const { return theta2_ * (1.0 + 1.0 / (a_ * std::pow(qd_, k - 1))); }

double MatModel::ddiag(int k) const { return theta2_ * (1.0 + a_ * std::pow(qd_, k - 1)); }

double MatModel::wxv(const Word& word) const {
    // One truncated left-to-right pass. Truncating the matrices replaces the
    // missing w_{T+1} boundary contribution, so the value converges as T
    // grows whenever the word has a stable truncated evaluation at all;
    // convergence is checked by comparing three truncation levels.
    auto eval_at = [this, &word](int T) {
        std::vector<double> r(static_cast<std::size_t>(T) + 2, 0.0);
        for (int k = 1; k <= T; ++k) r[static_cast<std::size_t>(k)] = s_[static_cast<std::size_t>(k)];
        double theta1 = theta();
        for (Gen g : word) {
            std::vector<double> next(static_cast<std::size_t>(T) + 2, 0.0);
            for (int k = 1; k <= T; ++k) {
                double diag = 0.0, sub = 0.0;
                switch (g) {
                case Gen::D: diag = ddiag(k); break;
                case Gen::E: diag = ediag(k); sub = theta2_; break;
                case Gen::d: diag = theta1 * a_ * std::pow(qd_, k - 1); break;
                case Gen::e: diag = theta1 / (a_ * std::pow(qd_, k - 1)); sub = theta1; break;
                }
                double val = diag * r[static_cast<std::size_t>(k)];
                if (sub != 0.0 && k < T)
                    val += sub * vr_[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(k) + 1];
                next[static_cast<std::size_t>(k)] = val;
            }
            r = std::move(next);
        }
        double sum = 0.0;
        for (int k = 1; k <= T; ++k) sum += r[static_cast<std::size_t>(k)];
        return sum;
    };
    int step = std::max(2, trunc_ / 8);
    double v2 = eval_at(trunc_);
    double v1 = eval_at(std::max(2, trunc_ - step));
    if (!std::isfinite(v2)) throw TruncationError("<W|X|V> overflowed");
    // the cross-truncation difference bounds the dropped tail
    if (std::fabs(v2 - v1) > 1e-11 * std::max(1.0, std::fabs(v2)))
        throw TruncationError("<W|X|V> has not converged at this truncation");
    return v2;
}

std::optional<int> MatModel::finite_index(double tol) const {
    double acq = a_ * c_;
    for (int m = 0; m <= trunc_; ++m) {
        if (std::fabs(acq - 1.0) < tol) return m;
        acq *= qd_;
    }
    return std::nullopt;
}

double MatModel::relation_residual() const {
    double worst = 0.0;
    for (int k = 1; k <= trunc_ - 1; ++k) {
        // diagonal: (1-q) D_kk E_kk - D_kk - E_kk
        double dk = ddiag(k), ek = ediag(k);
        double res = (1.0 - qd_) * dk * ek - dk - ek;
        worst = std::max(worst, std::fabs(res) / std::max(1.0, std::fabs(dk * ek)));
        if (k + 1 > trunc_ - 1) continue;
        // subdiagonal: theta^2 (D_{k+1,k+1} - q D_kk - 1)
        double sub = theta2_ * (ddiag(k + 1) - qd_ * dk - 1.0);
        worst = std::max(worst, std::fabs(sub) / std::max(1.0, theta2_ * std::fabs(ddiag(k + 1))));
    }
    return worst;
}

double MatModel::boundary_residual() const {
    double theta1 = theta();
    double worst = 0.0;
    double qk1 = 1.0;
    for (int k = 1; k <= trunc_ - 1; ++k) {
        double sk = s_[static_cast<std::size_t>(k)];
        double uk = u_[static_cast<std::size_t>(k)];
        // <W|e components, scaled by v_k
        double lhs_w = theta1 * (sk / (a_ * qk1) + uk);
        double rhs_w = theta1 * (c_ + d_ - a_ * c_ * d_ * qk1) * sk;
        worst = std::max(worst, std::fabs(lhs_w - rhs_w) / std::max(1.0, std::fabs(rhs_w)));
        // e|V> components, scaled by w_k (u_{k-1} = w_k v_{k-1}, zero at k=1)
        double ukm1 = u_[static_cast<std::size_t>(k) - 1];
        double lhs_v = theta1 * (ukm1 + sk / (a_ * qk1));
        double rhs_v = theta1 / (a_ * b_) * ((a_ + b_) - a_ * qk1) * sk;
        worst = std::max(worst, std::fabs(lhs_v - rhs_v) / std::max(1.0, std::fabs(rhs_v)));
        qk1 *= qd_;
    }
    return worst;
}

MatModel::Gap MatModel::associativity_gap() const {
    double theta1 = theta();
    double sum_a = 0.0, sum_b = 0.0;
    double qk1 = 1.0;
    for (int k = 1; k <= trunc_; ++k) {
        double sk = s_[static_cast<std::size_t>(k)];
        sum_a += theta1 * (sk / (a_ * qk1) + u_[static_cast<std::size_t>(k)]);
        sum_b += theta1 * (u_[static_cast<std::size_t>(k) - 1] + sk / (a_ * qk1));
        qk1 *= qd_;
    }
    Gap gap;
    gap.measured = sum_a - sum_b;
    gap.predicted = -(theta1 / a_) * qpoch_inf(a_ * c_, qd_) * qpoch_inf(a_ * d_, qd_) /
                    (qpoch_inf(qd_, qd_) * qpoch_inf(qd_ * a_ / b_, qd_));
    return gap;
}

ExactMatModel::ExactMatModel(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& q,
                             int trunc)
    : a_(a), b_(b), c_(c), d_(d), q_(q), trunc_(trunc) {
    if (a <= 0) throw ParameterError("matrix model needs a > 0");
    if (b == 0) throw ParameterError("degenerate model: b = 0 collapses |V>");
    if (b > 0) throw ParameterError("matrix model needs b < 0");
    if (q <= 0 || q >= 1) throw ParameterError("matrix model needs 0 < q < 1");
    if (trunc < 2 || trunc > 64) throw ParameterError("exact model supports 2 <= trunc <= 64");
    theta2_ = Rat(1) / (Rat(1) - q);
    w_.assign(static_cast<std::size_t>(trunc_), Rat(0));
    v_.assign(static_cast<std::size_t>(trunc_), Rat(0));
    w_[0] = v_[0] = Rat(1);
    for (int k = 1; k < trunc_; ++k) {
        Rat qk1 = qpow(q_, k - 1);
        Rat qk = qpow(q_, k);
        w_[static_cast<std::size_t>(k)] =
            w_[static_cast<std::size_t>(k - 1)] * (c_ + d_ - a_ * c_ * d_ * qk1 - Rat(1) / (a_ * qk1));
        v_[static_cast<std::size_t>(k)] = v_[static_cast<std::size_t>(k - 1)] * a_ * b_ /
                                          (a_ * (Rat(1) - qk) + b_ * (Rat(1) - Rat(1) / qk));
    }
}

Rat ExactMatModel::ediag(int k) const { return theta2_ * (Rat(1) + Rat(1) / (a_ * qpow(q_, k - 1))); }

Rat ExactMatModel::ddiag(int k) const { return theta2_ * (Rat(1) + a_ * qpow(q_, k - 1)); }

Rat ExactMatModel::wxv(const Word& word) const {
    if (!is_DE_word(word)) throw ParameterError("exact model evaluates words over D/E");
    std::vector<Rat> p = w_;
    for (Gen g : word) {
        std::vector<Rat> next(static_cast<std::size_t>(trunc_), Rat(0));
        for (int k = 1; k <= trunc_; ++k) {
            Rat val = (g == Gen::D ? ddiag(k) : ediag(k)) * p[static_cast<std::size_t>(k - 1)];
            if (g == Gen::E && k < trunc_) val += theta2_ * p[static_cast<std::size_t>(k)];
            next[static_cast<std::size_t>(k - 1)] = val;
        }
        p = std::move(next);
    }
    Rat sum(0);
    for (int k = 0; k < trunc_; ++k) sum += p[static_cast<std::size_t>(k)] * v_[static_cast<std::size_t>(k)];
    return sum;
}

std::optional<int> ExactMatModel::finite_index() const {
    Rat acq = a_ * c_;
    for (int m = 0; m <= trunc_; ++m) {
        if (acq == 1) return m;
        acq *= q_;
    }
    return std::nullopt;
}

bool ExactMatModel::relation_holds() const {
    for (int k = 1; k <= trunc_ - 1; ++k) {
        Rat dk = ddiag(k), ek = ediag(k);
        if ((Rat(1) - q_) * dk * ek - dk - ek != 0) return false;
        if (k + 1 <= trunc_ - 1 && ddiag(k + 1) - q_ * dk - Rat(1) != 0) return false;
    }
    return true;
}

Rat ExactMatModel::normalizer() const {
    auto m_opt = finite_index();
    if (!m_opt) throw ParameterError("normalizer needs the terminating case a c q^m = 1");
    int m = *m_opt;
    Rat num(1), den(1);
    for (int j = 0; j < m; ++j) {
        num *= Rat(1) - b_ * d_ * rat_pow(q_, j - m);
        den *= Rat(1) - b_ * c_ * qpow(q_, j);
    }
    if (num == 0)
        throw ModelError("vanishing normalizer: bd in {q..q^m} (relation to phi_1 untested)");
    return num / den;
}

bool finite_model_check(const ExactMatModel& model, const PhiTable& phi0, const Word& word) {
    Rat lhs = model.wxv(word);
    QExt rhs = phi_eval(phi0, de_substitute(word, phi0.ctx())) * model.normalizer();
    return rhs.is_rational() && rhs.r() == lhs;
}

} // namespace qasep
