#include "sqz/oracle.hpp"

#include <cmath>

namespace sqz {

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
    Eigen::MatrixXcd out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j)
            out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    return out;
}

// Stored slot -> defining operator, same order as MomentIndex.
// {nc, na, atom-1 op, atom-2 op}; 0 means absent.
struct SlotOp {
    int nc, na, at1, at2;
};

constexpr std::array<SlotOp, kNumMoments> kSlotOps = {{
    {0, 1, 0, 0},   {0, 0, 12, 0},  {0, 0, 13, 0},  {0, 0, 23, 0},  {0, 0, 22, 0},
    {0, 0, 33, 0},  {1, 1, 0, 0},   {0, 2, 0, 0},   {1, 0, 12, 0},  {1, 0, 13, 0},
    {1, 0, 23, 0},  {1, 0, 22, 0},  {1, 0, 33, 0},  {0, 1, 12, 0},  {0, 1, 13, 0},
    {0, 1, 23, 0},  {0, 0, 12, 12}, {0, 0, 22, 22}, {0, 0, 23, 23}, {0, 0, 33, 33},
    {0, 0, 13, 13}, {0, 0, 12, 21}, {0, 0, 12, 13}, {0, 0, 21, 13}, {0, 0, 32, 23},
    {0, 0, 32, 13}, {0, 0, 12, 32}, {0, 0, 12, 23}, {0, 0, 31, 13}, {0, 0, 23, 13},
    {0, 0, 22, 13}, {0, 0, 33, 13}, {0, 0, 33, 32}, {0, 0, 22, 33}, {0, 0, 22, 23},
    {0, 0, 22, 12}, {0, 0, 33, 12},
}};

}  // namespace

TruncatedSystem::TruncatedSystem(const PhysicalParams& params, int n_atoms, int fock_cutoff,
                                 double polar, double azimuth)
    : params_(params), n_atoms_(n_atoms), fock_(fock_cutoff) {
    if (n_atoms < 1 || n_atoms > 3) throw ConfigError("oracle supports 1..3 atoms");
    if (fock_cutoff < 2 || fock_cutoff > 6) throw ConfigError("oracle Fock cutoff out of range");
    params_.validate();

    Eigen::MatrixXcd a_ph = Eigen::MatrixXcd::Zero(fock_, fock_);
    for (int n = 1; n < fock_; ++n) a_ph(n - 1, n) = std::sqrt(static_cast<double>(n));
    const Eigen::MatrixXcd id_ph = Eigen::MatrixXcd::Identity(fock_, fock_);
    const Eigen::MatrixXcd id_at = Eigen::MatrixXcd::Identity(3, 3);

    auto lift = [&](const Eigen::MatrixXcd& ph, int atom, const Eigen::MatrixXcd& at) {
        Eigen::MatrixXcd out = ph;
        for (int k = 0; k < n_atoms_; ++k) out = kron(out, k == atom ? at : id_at);
        return out;
    };

    a_ = lift(a_ph, -1, id_at);
    ad_ = a_.adjoint();
    sig_.resize(n_atoms_);
    for (int k = 0; k < n_atoms_; ++k) {
        for (int l = 1; l <= 3; ++l) {
            for (int m = 1; m <= 3; ++m) {
                Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(3, 3);
                s(l - 1, m - 1) = 1.0;
                sig_[k][(l - 1) * 3 + (m - 1)] = lift(id_ph, k, s);
            }
        }
    }

    slot_ops_.reserve(kNumMoments);
    auto sig_of = [&](int atom, int lm) { return sig_[atom][(lm / 10 - 1) * 3 + (lm % 10 - 1)]; };
    for (const auto& so : kSlotOps) {
        Eigen::MatrixXcd op = Eigen::MatrixXcd::Identity(a_.rows(), a_.cols());
        for (int i = 0; i < so.nc; ++i) op = op * ad_;
        for (int i = 0; i < so.na; ++i) op = op * a_;
        if (so.at1) op = op * sig_of(0, so.at1);
        if (so.at2) op = op * sig_of(1, so.at2);
        slot_ops_.push_back(op);
    }

    // product initial state: vacuum x per-atom superposition of |1>, |2>
    Eigen::VectorXcd ket_ph = Eigen::VectorXcd::Zero(fock_);
    ket_ph(0) = 1.0;
    Eigen::VectorXcd ket_at = Eigen::VectorXcd::Zero(3);
    ket_at(0) = std::cos(0.5 * polar);
    ket_at(1) = std::sin(0.5 * polar) * std::exp(-im * azimuth);
    Eigen::VectorXcd psi = ket_ph;
    for (int k = 0; k < n_atoms_; ++k) {
        Eigen::VectorXcd next(psi.size() * 3);
        for (Eigen::Index i = 0; i < psi.size(); ++i) next.segment(i * 3, 3) = psi(i) * ket_at;
        psi = next;
    }
    rho_ = psi * psi.adjoint();
}

Eigen::MatrixXcd TruncatedSystem::hamiltonian(const DriveFlags& flags) const {
    const double d_c = params_.delta_c();
    const double d_21 = params_.delta_21();
    const double d_32 = params_.delta_32();
    Eigen::MatrixXcd H = d_c * (ad_ * a_);
    for (int k = 0; k < n_atoms_; ++k) {
        const auto& s22 = sig_[k][4];
        const auto& s33 = sig_[k][8];
        const auto& s23 = sig_[k][5];
        const auto& s32 = sig_[k][7];
        const auto& s12 = sig_[k][1];
        const auto& s21 = sig_[k][3];
        H += d_21 * s22 + (d_21 + d_32) * s33;
        H += params_.g * (ad_ * s23 + s32 * a_);
        if (flags.microwave_on) H += params_.mw_amp * (s12 + s21);
    }
    if (flags.probe_on) H += params_.probe_amp * std::sqrt(params_.kappa_1) * (a_ + ad_);
    return H;
}

Eigen::MatrixXcd TruncatedSystem::liouvillian(const Eigen::MatrixXcd& rho, const DriveFlags& flags) const {
    const Eigen::MatrixXcd H = hamiltonian(flags);
    Eigen::MatrixXcd out = -im * (H * rho - rho * H);
    auto lind = [&rho](const Eigen::MatrixXcd& j, double rate) -> Eigen::MatrixXcd {
        const Eigen::MatrixXcd jdj = j.adjoint() * j;
        return rate * (j * rho * j.adjoint() - 0.5 * (jdj * rho + rho * jdj));
    };
    out += lind(a_, params_.kappa);
    for (int k = 0; k < n_atoms_; ++k) {
        out += lind(sig_[k][5], params_.gamma);                    // sigma^23
        out += lind(sig_[k][4] - sig_[k][8], 0.5 * params_.chi);   // sigma^22 - sigma^33
    }
    return out;
}

Eigen::MatrixXcd TruncatedSystem::backaction(const Eigen::MatrixXcd& rho, const DriveFlags& flags) const {
    if (!flags.measurement_on || params_.eta == 0.0) return Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
    const double m = std::sqrt(params_.eta * params_.kappa_2);
    const cx alpha = (a_ * rho).trace();
    return m * ((a_ - alpha * Eigen::MatrixXcd::Identity(rho.rows(), rho.cols())) * rho +
                rho * (ad_ - std::conj(alpha) * Eigen::MatrixXcd::Identity(rho.rows(), rho.cols())));
}

void TruncatedSystem::sme_step(const DriveFlags& flags, double dt, double dW) {
    rho_ += dt * liouvillian(rho_, flags) + dW * backaction(rho_, flags);
    herm_error_ = (rho_ - rho_.adjoint()).norm();
    rho_ = 0.5 * (rho_ + rho_.adjoint().eval());
    const double tr = rho_.trace().real();
    trace_error_ = std::abs(tr - 1.0);
    if (!(tr > 0.0) || !rho_.allFinite()) {
        throw IntegrationError("oracle density matrix collapsed or diverged", 0);
    }
    rho_ /= tr;
}

MomentState TruncatedSystem::extract_moments() const {
    MomentState st;
    for (std::size_t i = 0; i < kNumMoments; ++i) st[i] = (slot_ops_[i] * rho_).trace();
    if (n_atoms_ < 2) {
        for (std::size_t i = kP1212; i < kNumMoments; ++i) st[i] = 0.0;
    }
    return st;
}

cx TruncatedSystem::extract_pair(int atom_i, int ab, int atom_j, int cd) const {
    const auto sig_of = [&](int atom, int lm) { return sig_[atom][(lm / 10 - 1) * 3 + (lm % 10 - 1)]; };
    return (sig_of(atom_i, ab) * sig_of(atom_j, cd) * rho_).trace();
}

MomentState TruncatedSystem::moment_drift(const DriveFlags& flags) const {
    const Eigen::MatrixXcd L = liouvillian(rho_, flags);
    MomentState st;
    for (std::size_t i = 0; i < kNumMoments; ++i) st[i] = (slot_ops_[i] * L).trace();
    return st;
}

MomentState TruncatedSystem::moment_diffusion(const DriveFlags& flags) const {
    const Eigen::MatrixXcd B = backaction(rho_, flags);
    MomentState st;
    for (std::size_t i = 0; i < kNumMoments; ++i) st[i] = (slot_ops_[i] * B).trace();
    return st;
}

double TruncatedSystem::photocurrent_sample(double dW, double dt) const {
    const cx alpha = (a_ * rho_).trace();
    return std::sqrt(params_.eta * params_.kappa_2) * alpha.real() + dW / dt;
}

double TruncatedSystem::top_fock_population() const {
    const int at_dim = static_cast<int>(std::pow(3, n_atoms_));
    double pop = 0.0;
    for (int i = 0; i < at_dim; ++i) {
        const int idx = (fock_ - 1) * at_dim + i;
        pop += rho_(idx, idx).real();
    }
    return pop;
}

}  // namespace sqz
