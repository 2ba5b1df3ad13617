#include "commands.hpp"

#include <cmath>

#include "cpsdlab/bell.hpp"
#include "cpsdlab/cpsdrank.hpp"
#include "cpsdlab/lorentz.hpp"
#include "cpsdlab/quantum.hpp"
#include "cpsdlab/separations.hpp"

namespace cpsdlab::cli {
namespace {

Status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput:
      return Status::InvalidInput;
    case ErrorKind::CapExceeded:
      return Status::CapExceeded;
    case ErrorKind::VerificationFailed:
    case ErrorKind::Numerical:
      return Status::VerificationFailed;
  }
  return Status::InvalidInput;
}

template <typename F>
CommandResult guard(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    CommandResult r;
    r.status = status_of(e.kind());
    r.message = e.what();
    return r;
  }
}

// Generate output is accepted as input: unwrap {"payload": ...}.
const Json& unwrap(const Json& input) {
  if (input.is_object() && input.contains("payload")) return input.at("payload");
  return input;
}

const Json& matrix_field(const Json& input) {
  const Json& j = unwrap(input);
  if (j.is_object() && j.contains("matrix")) return j.at("matrix");
  return j;
}

void fail_verification(CommandResult& r, double residual, const std::string& what) {
  r.status = Status::VerificationFailed;
  r.max_residual = residual;
  r.message = what;
}

Json vector_json(const std::vector<int>& v) { return Json(v); }

RealMatrix eij_gram(int r, std::vector<HermMatrix>& factors) {
  require(r >= 2, "eij-gram needs r >= 2");
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      RealMatrix e = RealMatrix::Identity(r, r);
      e(i, j) += 1.0;
      e(j, i) += 1.0;
      factors.emplace_back(e);
    }
  }
  return CpsdFactorization(factors).gram();
}

// Unit vectors u, v with <u_x, v_y> = C_xy for a symmetric psd C with
// diagonal at most 1: Gram vectors of C, padded by orthogonal directions.
std::pair<std::vector<RealVector>, std::vector<RealVector>> correlation_vectors(const RealMatrix& c) {
  require(c.rows() == c.cols(), "behavior input must be a square correlation matrix");
  require_correlation(c);
  require(is_symmetric(c) && is_psd(c), "behavior input must be a symmetric psd correlation matrix");
  require(c.diagonal().maxCoeff() <= 1.0 + 1e-9, "correlation diagonal must not exceed 1");
  const std::vector<RealVector> g = gram_vectors(c);
  const Index n = c.rows();
  const Index r = g.front().size();
  const bool unit = (c.diagonal().array() - 1.0).abs().maxCoeff() <= 1e-9;
  if (unit && r > 0) {
    std::vector<RealVector> u;
    for (const auto& v : g) u.push_back(v / v.norm());
    return {u, u};
  }
  std::vector<RealVector> u;
  std::vector<RealVector> v;
  for (Index x = 0; x < n; ++x) {
    const RealVector& gx = g[static_cast<std::size_t>(x)];
    const double pad = std::sqrt(std::max(0.0, 1.0 - gx.squaredNorm()));
    RealVector a = RealVector::Zero(r + 2 * n);
    a.head(r) = gx;
    RealVector b = a;
    a(r + x) = pad;
    b(r + n + x) = pad;
    u.push_back(a / a.norm());
    v.push_back(b / b.norm());
  }
  return {u, v};
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Ok:
      return "ok";
    case Status::InvalidInput:
      return "invalid-input";
    case Status::CapExceeded:
      return "cap-exceeded";
    case Status::VerificationFailed:
      return "verification-failed";
  }
  return "invalid-input";
}

int CommandResult::exit_code() const {
  switch (status) {
    case Status::Ok:
      return 0;
    case Status::InvalidInput:
      return 2;
    case Status::CapExceeded:
      return 3;
    case Status::VerificationFailed:
      return 4;
  }
  return 2;
}

Json CommandResult::to_json() const {
  Json out{{"status", to_string(status)}, {"provenance", provenance}};
  if (status == Status::Ok) {
    out["payload"] = payload;
  } else {
    out["error"] = message;
    if (!payload.empty()) out["payload"] = payload;
  }
  if (max_residual) out["max_residual"] = *max_residual;
  return out;
}

CommandResult cmd_generate(const std::string& kind, const GenerateParams& p, const CommonOptions& opts) {
  return guard([&] {
    CommandResult r;
    r.payload["kind"] = kind;
    if (kind == "elliptope-extreme") {
      const RealMatrix c = elliptope_extreme_construct(p.n, p.r);
      const ExtremeReport rep = elliptope_extreme_test(c);
      r.payload["matrix"] = to_json(c);
      r.payload["rank"] = rep.rank;
      r.payload["extreme"] = rep.extreme;
      r.payload["span_dim"] = rep.span_dim;
      r.provenance = {"elliptope-extreme-construction", "outer-product-span-test"};
    } else if (kind == "exp-family") {
      const ExpFamily fam = exponential_family(p.n);
      r.payload["n"] = fam.n;
      r.payload["questions"] = fam.questions;
      r.payload["correlation"] = to_json(fam.correlation);
      r.payload["behavior"] = to_json(fam.behavior);
      r.payload["lorentz"] = to_json(behavior_gl_vectors(fam.vectors));
      r.payload["lower_bound"] = fam.lower_bound;
      r.provenance = {"exponential-correlation-family", "behavior-matrix", "gram-lorentz-behavior"};
    } else if (kind == "cycle-sep") {
      const GramLorentzFactorization f = cycle_vectors(p.n);
      std::vector<RealVector> coords;
      for (const auto& v : f.vectors()) coords.push_back(v.coordinates());
      const NotCpCertificate cert = check_not_cp(coords, cycle_pairs(p.n), cycle_odd_subset(p.n));
      r.payload["matrix"] = to_json(gl_matrix(f));
      r.payload["lorentz"] = to_json(f);
      r.payload["not_cp_certificate"] = to_json(cert);
      r.provenance = {"lorentz-cycle-family", "paired-vector-not-cp-test"};
      if (!cert.valid) fail_verification(r, 0.0, "not-CP certificate failed");
    } else if (kind == "odd-cycle-dnn") {
      const RealMatrix x = odd_cycle_dnn(p.t);
      const VnaIndexSets s = odd_cycle_index_sets(p.t);
      const NotVnaCertificate cert = check_not_vna(x, s.subset_i, s.subset_j, s.i_star, s.j_star);
      r.payload["matrix"] = to_json(x);
      r.payload["support"] = to_json(support_graph(x));
      r.payload["not_vna_certificate"] = to_json(cert);
      r.provenance = {"odd-cycle-shifted-adjacency", "span-pivot-not-vna-test"};
      if (!cert.valid) fail_verification(r, 0.0, "not-VNA certificate failed");
    } else if (kind == "eij-gram") {
      std::vector<HermMatrix> factors;
      const RealMatrix x = eij_gram(p.r, factors);
      r.payload["matrix"] = to_json(x);
      r.payload["factorization"] = to_json(CpsdFactorization(factors));
      r.payload["rank"] = numerical_rank(x);
      r.provenance = {"identity-plus-symmetric-unit-gram"};
    } else {
      fail(ErrorKind::InvalidInput, "unknown generate kind \"" + kind + "\"");
    }
    (void)opts;
    return r;
  });
}

CommandResult cmd_factorize(const Json& input, const CommonOptions& opts) {
  return guard([&] {
    CommandResult r;
    const Json& j = unwrap(input);
    std::optional<GramLorentzFactorization> gl;
    if (j.is_object() && j.contains("vectors")) {
      gl = lorentz_from_json(j);
      r.provenance.push_back("gram-lorentz-embedding");
    } else if (j.is_object() && j.contains("lorentz")) {
      gl = lorentz_from_json(j.at("lorentz"));
      r.provenance.push_back("gram-lorentz-embedding");
    } else {
      const RealMatrix x = real_matrix_from_json(matrix_field(input));
      if (x.rows() != 2 || x.cols() != 2) {
        fail(ErrorKind::InvalidInput,
             "not a Gram-Lorentz input: supply Lorentz vectors or a 2x2 doubly nonnegative matrix");
      }
      require(is_symmetric(x), "2x2 input must be symmetric");
      gl = gl2_factorize(x(0, 0), x(0, 1), x(1, 1));
      r.provenance = {"two-by-two-lorentz-factorization", "gram-lorentz-embedding"};
    }

    const RealMatrix target = gl_matrix(*gl);
    const CpsdFactorization f = gl_to_cpsd(*gl, opts.cap);
    const VerifyReport v = verify_factorization(target, f, opts.tol);
    const int rank = numerical_rank(target);
    r.payload["matrix"] = to_json(target);
    r.payload["factorization"] = to_json(f);
    r.payload["d"] = f.d();
    r.payload["rank"] = rank;
    r.payload["size_bound"] = gram_lorentz_size_bound(rank);
    r.payload["verify"] = to_json(v);
    r.max_residual = v.max_deviation;
    if (!v.ok) fail_verification(r, v.max_deviation, "factorization does not reproduce the input");
    return r;
  });
}

CommandResult cmd_bound(const Json& input, const BoundOptions& bound, const CommonOptions& opts) {
  return guard([&] {
    CommandResult r;
    const RealMatrix x = real_matrix_from_json(matrix_field(input));
    require(x.rows() == x.cols(), "bound input must be square");
    require(is_symmetric(x), "bound input must be symmetric");
    BoundReport rep = bound_report(x, bound.scale_search, bound.scale_iters);
    r.provenance = {"analytic-trace-bound", "rank-sqrt-bound"};
    if (bound.scale_search) r.provenance.push_back("scaled-analytic-bound");

    if (bound.verify) {
      const CpsdFactorization f = factorization_from_json(unwrap(*bound.verify).contains("factorization")
                                                              ? unwrap(*bound.verify).at("factorization")
                                                              : unwrap(*bound.verify));
      const VerifyReport v = attach_upper_bound(rep, x, f, "verified-factorization", opts.tol);
      r.payload["verify"] = to_json(v);
      r.max_residual = v.max_deviation;
      if (v.ok) {
        r.provenance.push_back("verified-factorization");
      } else {
        fail_verification(r, v.max_deviation, "supplied factorization does not reproduce the matrix");
      }
    }
    if (bound.graph) {
      const Graph g = support_graph(x);
      const CpsdGraphResult res = is_cpsd_graph(g);
      r.payload["graph"] = {{"support", to_json(g)},
                            {"cpsd_graph", res.cpsd},
                            {"witness", vector_json(res.witness)}};
      r.provenance.push_back("odd-cycle-graph-characterization");
    }
    r.payload["bounds"] = to_json(rep);
    return r;
  });
}

CommandResult cmd_behavior(const Json& input, const BehaviorOptions& behavior, const CommonOptions& opts) {
  return guard([&] {
    CommandResult r;
    const RealMatrix c = real_matrix_from_json(matrix_field(input));
    const auto [u, v] = correlation_vectors(c);
    const Behavior p = behavior_from_correlation(c);
    r.payload["behavior"] = to_json(p);
    r.provenance = {"unbiased-behavior-from-correlation"};

    const RealMatrix pc = behavior_matrix(c);
    Json bounds{{"cpsd_rank_lower", rank_lower_bound(pc)}};
    if (elliptope_member(c)) {
      const ExtremeReport ext = elliptope_extreme_test(c);
      bounds["extreme"] = ext.extreme;
      if (ext.extreme) {
        const DqBound dq = dq_lower_bound(c, ext);
        bounds["dimension_lower"] = dq.value;
        bounds["dimension_ceiling"] = dq.ceiling;
        bounds["dimension_status"] = "certified";
        r.provenance.push_back("extremal-correlation-dimension-bound");
      }
    } else {
      bounds["extreme"] = false;
    }
    if (!bounds.contains("dimension_status")) {
      bounds["dimension_lower"] = nullptr;
      bounds["dimension_ceiling"] = nullptr;
      bounds["dimension_status"] = "unavailable";
    }
    r.provenance.push_back("rank-sqrt-bound");
    r.payload["bounds"] = bounds;

    double worst = 0.0;
    if (behavior.simulate) {
      const QuantumRepresentation rep = representation_from_vectors(u, v, opts.cap);
      const Behavior sim = simulate_behavior(rep);
      double dev = 0.0;
      for (std::size_t k = 0; k < p.table().size(); ++k) {
        dev = std::max(dev, std::abs(p.table()[k] - sim.table()[k]));
      }
      r.payload["simulation"] = {{"d", rep.d}, {"max_deviation", dev}};
      r.provenance.push_back("clifford-observables-on-maximally-entangled-state");
      worst = std::max(worst, dev);
      r.max_residual = worst;
      if (dev > opts.tol) fail_verification(r, dev, "simulated behavior deviates from the target");
    }
    if (behavior.validate) {
      const GramLorentzFactorization gl = gl_behavior_factorization(c, u, v);
      const bool ok = validate_affine_section(gl_matrix(gl), p);
      r.payload["affine_section_valid"] = ok;
      r.provenance.push_back("gram-lorentz-behavior");
      if (!ok) fail_verification(r, worst, "Gram matrix violates the affine section constraints");
    }
    return r;
  });
}

CommandResult cmd_graph(const Json& input, const CommonOptions& opts) {
  return guard([&] {
    (void)opts;
    CommandResult r;
    const Graph g = graph_from_json(unwrap(input));
    const CpsdGraphResult res = is_cpsd_graph(g);
    r.payload = {{"graph", to_json(g)}, {"cpsd_graph", res.cpsd}, {"witness", vector_json(res.witness)}};
    r.provenance = {"odd-cycle-graph-characterization"};
    return r;
  });
}

}  // namespace cpsdlab::cli
