#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sqz/dynamics.hpp"
#include "sqz/moments.hpp"
#include "sqz/params.hpp"

namespace sqz {

// Brute-force conditional density-matrix integrator on a truncated Hilbert
// space (photon Fock cutoff x 3^n_atoms). Ground truth for the moment
// equations at N <= 3; never meant to scale beyond that.
class TruncatedSystem {
  public:
    // Atoms start in cos(polar/2)|1> + sin(polar/2)e^{-i azimuth}|2>, cavity in vacuum.
    TruncatedSystem(const PhysicalParams& params, int n_atoms, int fock_cutoff,
                    double polar, double azimuth);

    int n_atoms() const { return n_atoms_; }
    int fock_cutoff() const { return fock_; }
    int dimension() const { return static_cast<int>(rho_.rows()); }
    const Eigen::MatrixXcd& rho() const { return rho_; }

    // Euler-Maruyama update of the conditional density matrix in the same
    // rotating frame as the moment equations; hermitizes and renormalizes.
    void sme_step(const DriveFlags& flags, double dt, double dW);

    // tr(rho M) for every stored moment slot (pair moments from atoms 1 and 2).
    MomentState extract_moments() const;
    // Pair moment <sigma_i^{ab} sigma_j^{cd}> for arbitrary distinct atoms.
    cx extract_pair(int atom_i, int ab, int atom_j, int cd) const;

    // Exact time derivatives of every stored moment: the deterministic part
    // tr(M L(rho)) and the dW coefficient tr(M B(rho)).
    MomentState moment_drift(const DriveFlags& flags) const;
    MomentState moment_diffusion(const DriveFlags& flags) const;

    double photocurrent_sample(double dW, double dt) const;

    // Diagnostics
    double trace_error() const { return trace_error_; }          // before renormalization
    double hermiticity_error() const { return herm_error_; }     // before hermitization
    double top_fock_population() const;                          // cutoff validity monitor

  private:
    Eigen::MatrixXcd liouvillian(const Eigen::MatrixXcd& rho, const DriveFlags& flags) const;
    Eigen::MatrixXcd backaction(const Eigen::MatrixXcd& rho, const DriveFlags& flags) const;
    Eigen::MatrixXcd hamiltonian(const DriveFlags& flags) const;

    PhysicalParams params_;
    int n_atoms_;
    int fock_;
    Eigen::MatrixXcd rho_;
    Eigen::MatrixXcd a_, ad_;
    std::vector<std::array<Eigen::MatrixXcd, 9>> sig_;  // [atom][(l-1)*3+(m-1)]
    std::vector<Eigen::MatrixXcd> slot_ops_;
    double trace_error_ = 0.0;
    double herm_error_ = 0.0;
};

}  // namespace sqz
