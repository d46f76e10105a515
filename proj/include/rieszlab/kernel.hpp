#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace rieszlab {

/// Pairwise interaction kernel: Riesz r^{-s} with s > 0, or the logarithmic
/// kernel log(1/r). Evaluation works from the squared distance; common
/// exponents avoid pow() in the hot loops.
struct KernelSpec {
  enum class Variant { Riesz, Log };

  Variant variant = Variant::Riesz;
  double s = 1.0;

  static KernelSpec riesz(double s) {
    if (!(s > 0.0)) throw std::invalid_argument("Riesz kernel requires s > 0");
    KernelSpec k;
    k.variant = Variant::Riesz;
    k.s = s;
    k.init_path();
    return k;
  }

  static KernelSpec log() {
    KernelSpec k;
    k.variant = Variant::Log;
    k.s = 0.0;
    k.init_path();
    return k;
  }

  bool is_log() const { return variant == Variant::Log; }

  /// s for Riesz, 0 for Log; used in tolerance scalings like N^{1+s/d}.
  double s_or_zero() const { return is_log() ? 0.0 : s; }

  /// Kernel value from the squared distance r2 > 0.
  double eval_r2(double r2) const {
    switch (path_) {
      case FastPath::Log:
        return -0.5 * std::log(r2);
      case FastPath::S1:
        return 1.0 / std::sqrt(r2);
      case FastPath::S2:
        return 1.0 / r2;
      case FastPath::S3:
        return 1.0 / (r2 * std::sqrt(r2));
      case FastPath::S4:
        return 1.0 / (r2 * r2);
      case FastPath::SHalf:
        return 1.0 / std::sqrt(std::sqrt(r2));
      case FastPath::S3Half:
        return std::sqrt(std::sqrt(r2)) / r2;  // r2^{-3/4}
      case FastPath::S5Half:
        return 1.0 / (r2 * std::sqrt(std::sqrt(r2)));
      case FastPath::General:
        return std::pow(r2, -0.5 * s);
    }
    return 0.0;
  }

  /// Prefactor of (x_i - x_j) in the energy gradient:
  /// -2s r^{-(s+2)} for Riesz, -2 r^{-2} for Log.
  double grad_coef_r2(double r2) const {
    if (is_log()) return -2.0 / r2;
    return -2.0 * s * eval_r2(r2) / r2;
  }

  /// Prefactor of (y - x_j) in the potential gradient at y (half the above).
  double potential_grad_coef_r2(double r2) const {
    if (is_log()) return -1.0 / r2;
    return -s * eval_r2(r2) / r2;
  }

  /// pair_interaction: r^{-s} or -log r; throws on r <= 0 (coincident points).
  double eval(double r) const {
    if (!(r > 0.0)) throw std::domain_error("kernel undefined at r <= 0");
    if (is_log()) return -std::log(r);
    return eval_r2(r * r);
  }

  std::string name() const {
    if (is_log()) return "log";
    char buf[48];
    std::snprintf(buf, sizeof(buf), "riesz:%g", s);
    return buf;
  }

  /// Accepts "log", "riesz:S" or a bare exponent "S".
  static KernelSpec from_name(const std::string& name) {
    if (name == "log") return log();
    if (name.rfind("riesz:", 0) == 0) return riesz(std::stod(name.substr(6)));
    return riesz(std::stod(name));
  }

 private:
  enum class FastPath { Log, S1, S2, S3, S4, SHalf, S3Half, S5Half, General };
  FastPath path_ = FastPath::S1;

  void init_path() {
    if (is_log()) {
      path_ = FastPath::Log;
    } else if (s == 1.0) {
      path_ = FastPath::S1;
    } else if (s == 2.0) {
      path_ = FastPath::S2;
    } else if (s == 3.0) {
      path_ = FastPath::S3;
    } else if (s == 4.0) {
      path_ = FastPath::S4;
    } else if (s == 0.5) {
      path_ = FastPath::SHalf;
    } else if (s == 1.5) {
      path_ = FastPath::S3Half;
    } else if (s == 2.5) {
      path_ = FastPath::S5Half;
    } else {
      path_ = FastPath::General;
    }
  }
};

/// Free-function form of the kernel evaluation.
inline double pair_interaction(const KernelSpec& k, double r) { return k.eval(r); }

}  // namespace rieszlab
