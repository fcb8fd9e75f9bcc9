#include <cmath>
#include <string>

#include "common.hpp"
#include "fockbound/ladder.hpp"
#include "fockbound/verifier.hpp"

namespace fockbound {
namespace {

FockVector number(const FockVector& v) { return apply_number_power(v, 1.0, 0.0); }

double lowest_eigenvalue(const CMatrix& hermitian) {
  if (hermitian.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

CMatrix hermitize(const CMatrix& x) { return 0.5 * (x + x.adjoint()); }

// sum_j a^dagger(v_j) a(conj v_j) X for the columns v_j of `vectors`
FockVector rank_sum(const CMatrix& vectors, const FockVector& x) {
  FockVector out(x.basis_ptr());
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    const OneParticleVector v{CVector(vectors.col(j))};
    out = out + apply_create(v, apply_annihilate(v.conjugate(), x));
  }
  return out;
}

struct FormMaps {
  LinearMap lhs;
  LinearMap rhs;
  /// Also require lhs >= 0.
  bool lhs_nonnegative = false;
};

FormMaps cauchy_schwarz(const PsdParams& p, double sign) {
  if (static_cast<int>(p.a_vectors.size()) < p.M || static_cast<int>(p.b_vectors.size()) < p.M) {
    throw std::invalid_argument("psd_form_check: Cauchy-Schwarz needs M operator vectors");
  }
  auto a_op = [&p](int j, const FockVector& x) { return apply_annihilate(p.a_vectors[j], x); };
  auto a_adj = [&p](int j, const FockVector& x) {
    return apply_create(p.a_vectors[j].conjugate(), x);
  };
  auto b_op = [&p](int j, const FockVector& x) {
    return p.b_creates ? apply_create(p.b_vectors[j], x) : apply_annihilate(p.b_vectors[j], x);
  };
  auto b_adj = [&p](int j, const FockVector& x) {
    const auto v = p.b_vectors[j].conjugate();
    return p.b_creates ? apply_annihilate(v, x) : apply_create(v, x);
  };
  FormMaps maps;
  maps.lhs = [=, &p](const FockVector& x) {
    FockVector out(x.basis_ptr());
    for (int k = 0; k < p.M; ++k) {
      const FockVector u = a_op(k, x);
      for (int j = 0; j < p.M; ++j) out = out + a_adj(j, b_adj(k, b_op(j, u)));
    }
    return Complex(sign) * out;
  };
  maps.rhs = [=, &p](const FockVector& x) {
    FockVector out(x.basis_ptr());
    for (int j = 0; j < p.M; ++j) {
      const FockVector u = a_op(j, x);
      for (int k = 0; k < p.M; ++k) out = out + a_adj(j, b_adj(k, b_op(k, u)));
    }
    return out;
  };
  return maps;
}

FormMaps make_maps(PsdForm form, const PsdParams& p) {
  const CMatrix e = p.ons.columns().leftCols(p.M);
  switch (form) {
    case PsdForm::CauchySchwarzPlus: return cauchy_schwarz(p, 1.0);
    case PsdForm::CauchySchwarzMinus: return cauchy_schwarz(p, -1.0);
    case PsdForm::Diagonalization: {
      const CMatrix ae = p.a.entries() * e;
      // e'_j: orthonormal columns spanning {A e_1, ..., A e_M}
      Eigen::JacobiSVD<CMatrix> svd(ae, Eigen::ComputeThinU);
      const CMatrix bae = p.b.entries() * ae;
      const CMatrix be_prime = p.b.entries() * svd.matrixU();
      const double a_norm = operator_norm(p.a);
      FormMaps maps;
      maps.lhs = [bae](const FockVector& x) { return rank_sum(bae, x); };
      maps.rhs = [be_prime, a_norm](const FockVector& x) {
        return Complex(a_norm * a_norm) * rank_sum(be_prime, x);
      };
      maps.lhs_nonnegative = true;
      return maps;
    }
    case PsdForm::BasicEstimate: {
      const CMatrix ae = p.a.entries() * e;
      const double a_norm = operator_norm(p.a);
      return {[ae](const FockVector& x) { return rank_sum(ae, x); },
              [a_norm](const FockVector& x) { return Complex(a_norm * a_norm) * number(x); }};
    }
    case PsdForm::TechnicalFirst: {
      const CMatrix ae = p.a.entries() * e;
      const double a_norm = operator_norm(p.a);
      return {[ae](const FockVector& x) {
                FockVector out(x.basis_ptr());
                for (Eigen::Index j = 0; j < ae.cols(); ++j) {
                  const OneParticleVector f{CVector(ae.col(j))};
                  out = out + apply_create(f, apply_number_power(
                                                  apply_annihilate(f.conjugate(), x), 1.0, 1.0));
                }
                return out;
              },
              [a_norm](const FockVector& x) {
                return Complex(a_norm * a_norm) * number(number(x));
              }};
    }
    case PsdForm::TechnicalSecond:
      return {[e](const FockVector& x) {
                FockVector out(x.basis_ptr());
                for (Eigen::Index j = 0; j < e.cols(); ++j) {
                  const OneParticleVector v{CVector(e.col(j))};
                  out = out + apply_create(v, number(apply_annihilate(v.conjugate(), x)));
                }
                return out;
              },
              [](const FockVector& x) { return number(number(x)) - number(x); }};
  }
  throw std::invalid_argument("psd_form_check: unknown form");
}

}  // namespace

std::string_view to_string(PsdForm form) {
  switch (form) {
    case PsdForm::CauchySchwarzPlus: return "cauchy_schwarz_plus";
    case PsdForm::CauchySchwarzMinus: return "cauchy_schwarz_minus";
    case PsdForm::Diagonalization: return "diagonalization";
    case PsdForm::BasicEstimate: return "basic_estimate";
    case PsdForm::TechnicalFirst: return "technical_first";
    case PsdForm::TechnicalSecond: return "technical_second";
  }
  return "unknown";
}

PsdParams PsdParams::random(int d, int M, Rng& rng) {
  auto a = OneParticleOperator::random(d, rng);
  auto b = OneParticleOperator::random(d, rng);
  auto ons = random_orthonormal_system(d, d, rng.next_u64());
  PsdParams p{std::move(a), std::move(b), std::move(ons), M, {}, {}, false};
  p.a_vectors = detail::random_vectors(M, d, rng);
  p.b_vectors = detail::random_vectors(M, d, rng);
  return p;
}

PsdFormReport psd_form_check(PsdForm form, const PsdParams& params, const BasisPtr& basis,
                             int sector, const ToleranceConfig& tol) {
  if (params.M < 0 || params.M > params.ons.size()) {
    throw std::invalid_argument("psd_form_check: M outside the orthonormal system");
  }
  const FormMaps maps = make_maps(form, params);
  const CMatrix lhs = assemble_map_matrix(basis, sector, sector, maps.lhs);
  const CMatrix rhs = assemble_map_matrix(basis, sector, sector, maps.rhs);
  const CMatrix diff = rhs - lhs;

  PsdFormReport report;
  report.scale = std::max(operator_norm(lhs), operator_norm(rhs));
  const double diff_norm = operator_norm(diff);
  report.hermitian_residual =
      detail::relative(operator_norm(CMatrix(diff - diff.adjoint())), std::max(diff_norm, report.scale));
  report.difference_norm = detail::relative(diff_norm, report.scale);
  report.min_eigenvalue = lowest_eigenvalue(hermitize(diff));
  double negative = std::max(-report.min_eigenvalue, 0.0);
  if (maps.lhs_nonnegative) {
    negative = std::max(negative, -lowest_eigenvalue(hermitize(lhs)));
  }
  report.check = make_check("psd." + std::string(to_string(form)) + ".sector" +
                                std::to_string(sector),
                            detail::relative(negative, report.scale), tol.psd_eig_tol,
                            "M=" + std::to_string(params.M) +
                                " min_eig=" + std::to_string(report.min_eigenvalue));
  return report;
}

}  // namespace fockbound
