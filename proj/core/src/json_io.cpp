#include "cpsdlab/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cpsdlab/error.hpp"

namespace cpsdlab {
namespace {

template <typename F>
auto guarded(const char* what, F&& body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed ") + what + " JSON: " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), std::string("JSON is missing the field \"") + key + "\"");
  return j.at(key);
}

double number(const Json& j) {
  require(j.is_number(), "expected a number in JSON");
  return j.get<double>();
}

Json entry(Complex z, bool complex) {
  if (!complex) return z.real();
  return Json::array({z.real(), z.imag()});
}

Complex complex_entry(const Json& e) {
  if (e.is_array()) {
    require(e.size() == 2, "complex entries are [re, im] pairs");
    return {number(e[0]), number(e[1])};
  }
  return {number(e), 0.0};
}

ComplexMatrix complex_from_json(const Json& j) {
  const Json& entries = field(j, "entries");
  Index rows = 0;
  Index cols = 0;
  if (j.contains("n")) {
    rows = cols = field(j, "n").get<Index>();
  } else {
    rows = field(j, "rows").get<Index>();
    cols = field(j, "cols").get<Index>();
  }
  require(rows >= 0 && cols >= 0, "matrix dimensions must be nonnegative");
  require(entries.is_array(), "matrix entries must be an array");
  ComplexMatrix m(rows, cols);
  const bool flat = static_cast<Index>(entries.size()) == rows * cols &&
                    std::all_of(entries.begin(), entries.end(), [](const Json& e) {
                      return e.is_number() || (e.is_array() && e.size() == 2 && e[0].is_number());
                    });
  if (flat) {
    // Flat row-major list.
    for (Index r = 0; r < rows; ++r)
      for (Index c = 0; c < cols; ++c) m(r, c) = complex_entry(entries[static_cast<std::size_t>(r * cols + c)]);
    return m;
  }
  // Nested rows are accepted on input as well.
  require(static_cast<Index>(entries.size()) == rows, "matrix entries do not match the stated shape");
  for (Index r = 0; r < rows; ++r) {
    const Json& row = entries[static_cast<std::size_t>(r)];
    require(row.is_array() && static_cast<Index>(row.size()) == cols,
            "matrix entries do not match the stated shape");
    for (Index c = 0; c < cols; ++c) m(r, c) = complex_entry(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

void dump_into(std::ostringstream& out, const Json& j, int depth) {
  const auto indent = [&](int d) { out << std::string(static_cast<std::size_t>(2 * d), ' '); };
  switch (j.type()) {
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      require(std::isfinite(v), "cannot serialize a non-finite number");
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out << buf;
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      // Numbers and [re, im] pairs stay on one line.
      const bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) {
        return e.is_object() || (e.is_array() && std::any_of(e.begin(), e.end(), [](const Json& x) {
                                   return x.is_array() || x.is_object();
                                 }));
      });
      const bool numeric_rows = std::all_of(j.begin(), j.end(), [](const Json& e) {
        return e.is_array() && std::none_of(e.begin(), e.end(), [](const Json& x) {
                 return x.is_object() || (x.is_array() && !x.empty() && x[0].is_array());
               });
      });
      if (flat) {
        out << '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out << ", ";
          dump_into(out, j[i], depth + 1);
        }
        out << ']';
        return;
      }
      out << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        indent(depth + 1);
        if (numeric_rows) {
          out << '[';
          for (std::size_t k = 0; k < j[i].size(); ++k) {
            if (k) out << ", ";
            dump_into(out, j[i][k], depth + 2);
          }
          out << ']';
        } else {
          dump_into(out, j[i], depth + 1);
        }
        out << (i + 1 < j.size() ? ",\n" : "\n");
      }
      indent(depth);
      out << ']';
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      std::size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        indent(depth + 1);
        out << Json(it.key()).dump() << ": ";
        dump_into(out, it.value(), depth + 1);
        out << (i + 1 < j.size() ? ",\n" : "\n");
      }
      indent(depth);
      out << '}';
      return;
    }
    default:
      out << j.dump();
  }
}

Json checks_to_json(const std::vector<CertificateCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    out.push_back({{"name", c.name}, {"passed", c.passed}, {"value", c.value}, {"residual", c.residual}});
  }
  return out;
}

}  // namespace

Json to_json(const RealMatrix& m) {
  Json entries = Json::array();
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) entries.push_back(m(r, c));
  Json out{{"complex", false}, {"entries", std::move(entries)}};
  if (m.rows() == m.cols()) {
    out["n"] = m.rows();
  } else {
    out["rows"] = m.rows();
    out["cols"] = m.cols();
  }
  return out;
}

Json to_json(const HermMatrix& m) {
  const bool complex = m.size() > 0 && m.imag().cwiseAbs().maxCoeff() != 0.0;
  Json entries = Json::array();
  for (Index r = 0; r < m.size(); ++r)
    for (Index c = 0; c < m.size(); ++c) entries.push_back(entry(m(r, c), complex));
  return {{"n", m.size()}, {"complex", complex}, {"entries", std::move(entries)}};
}

RealMatrix real_matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    const ComplexMatrix m = complex_from_json(j);
    require(m.size() == 0 || m.imag().cwiseAbs().maxCoeff() == 0.0, "expected a real matrix");
    return RealMatrix(m.real());
  });
}

HermMatrix herm_matrix_from_json(const Json& j) {
  return guarded("matrix", [&] { return HermMatrix(complex_from_json(j)); });
}

Json to_json(const CpsdFactorization& f) {
  Json factors = Json::array();
  for (const auto& p : f.factors()) factors.push_back(to_json(p));
  return {{"d", f.d()}, {"factors", std::move(factors)}};
}

CpsdFactorization factorization_from_json(const Json& j) {
  return guarded("factorization", [&] {
    const Json& arr = field(j, "factors");
    require(arr.is_array(), "\"factors\" must be an array");
    std::vector<HermMatrix> factors;
    for (const auto& e : arr) factors.push_back(herm_matrix_from_json(e));
    CpsdFactorization f(std::move(factors));
    if (j.contains("d")) require(j.at("d").get<Index>() == f.d(), "stated d does not match the factors");
    return f;
  });
}

Json to_json(const GramLorentzFactorization& f) {
  Json vecs = Json::array();
  for (const auto& v : f.vectors()) {
    Json row = Json::array();
    const RealVector c = v.coordinates();
    for (Index i = 0; i < c.size(); ++i) row.push_back(c(i));
    vecs.push_back(std::move(row));
  }
  return {{"m", f.m()}, {"vectors", std::move(vecs)}};
}

GramLorentzFactorization lorentz_from_json(const Json& j) {
  return guarded("Lorentz", [&] {
    const Json& arr = field(j, "vectors");
    require(arr.is_array(), "\"vectors\" must be an array");
    std::vector<LorentzVector> vecs;
    for (const auto& row : arr) {
      require(row.is_array() && !row.empty(), "Lorentz vectors are nonempty arrays");
      RealVector v(static_cast<Index>(row.size()));
      for (std::size_t i = 0; i < row.size(); ++i) v(static_cast<Index>(i)) = number(row[i]);
      vecs.push_back(LorentzVector::from_coordinates(v));
    }
    GramLorentzFactorization f(std::move(vecs));
    if (j.contains("m")) require(j.at("m").get<int>() == f.m(), "stated m does not match the vectors");
    return f;
  });
}

Json to_json(const Behavior& p) {
  Json table = Json::array();
  for (int ai = 0; ai < 2; ++ai) {
    Json ta = Json::array();
    for (int bi = 0; bi < 2; ++bi) {
      Json tb = Json::array();
      for (int x = 0; x < p.m_a(); ++x) {
        Json row = Json::array();
        for (int y = 0; y < p.m_b(); ++y) row.push_back(p(outcome_sign(ai), outcome_sign(bi), x, y));
        tb.push_back(std::move(row));
      }
      ta.push_back(std::move(tb));
    }
    table.push_back(std::move(ta));
  }
  return {{"mA", p.m_a()}, {"mB", p.m_b()}, {"table", std::move(table)}};
}

Behavior behavior_from_json(const Json& j) {
  return guarded("behavior", [&] {
    const int m_a = field(j, "mA").get<int>();
    const int m_b = field(j, "mB").get<int>();
    require(m_a >= 1 && m_b >= 1, "behavior needs at least one question per party");
    const Json& t = field(j, "table");
    std::vector<double> table;
    table.reserve(static_cast<std::size_t>(4 * m_a * m_b));
    require(t.is_array() && t.size() == 2, "behavior table has the wrong shape");
    for (int ai = 0; ai < 2; ++ai) {
      require(t[ai].is_array() && t[ai].size() == 2, "behavior table has the wrong shape");
      for (int bi = 0; bi < 2; ++bi) {
        const Json& tb = t[ai][bi];
        require(tb.is_array() && static_cast<int>(tb.size()) == m_a, "behavior table has the wrong shape");
        for (int x = 0; x < m_a; ++x) {
          require(tb[x].is_array() && static_cast<int>(tb[x].size()) == m_b,
                  "behavior table has the wrong shape");
          for (int y = 0; y < m_b; ++y) table.push_back(number(tb[x][y]));
        }
      }
    }
    return Behavior(m_a, m_b, std::move(table));
  });
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  return {{"n", g.n()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    const int n = field(j, "n").get<int>();
    require(n >= 0, "graph vertex count must be nonnegative");
    std::vector<Graph::Edge> edges;
    for (const auto& e : field(j, "edges")) {
      require(e.is_array() && e.size() == 2, "graph edges are [u, v] pairs");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, edges);
  });
}

Json to_json(const QuantumRepresentation& rep) {
  Json ms = Json::array();
  for (const auto& m : rep.row_observables) ms.push_back(to_json(m));
  Json ns = Json::array();
  for (const auto& n : rep.col_observables) ns.push_back(to_json(n));
  Json state = rep.rho ? to_json(*rep.rho) : Json("max_entangled");
  return {{"d", rep.d}, {"M", std::move(ms)}, {"N", std::move(ns)}, {"state", std::move(state)}};
}

QuantumRepresentation representation_from_json(const Json& j) {
  return guarded("representation", [&] {
    QuantumRepresentation rep;
    rep.d = field(j, "d").get<Index>();
    for (const auto& m : field(j, "M")) rep.row_observables.push_back(herm_matrix_from_json(m));
    for (const auto& n : field(j, "N")) rep.col_observables.push_back(herm_matrix_from_json(n));
    const Json& state = field(j, "state");
    if (state.is_string()) {
      require(state.get<std::string>() == "max_entangled", "unknown state name");
    } else {
      rep.rho = herm_matrix_from_json(state);
    }
    validate_representation(rep);
    return rep;
  });
}

Json to_json(const VerifyReport& r) {
  return {{"ok", r.ok}, {"factors_psd", r.factors_psd}, {"max_deviation", r.max_deviation}};
}

Json to_json(const BoundReport& r) {
  Json out{{"lower_analytic", r.lower_analytic},
           {"lower_rank", r.lower_rank},
           {"lower_combined_int", r.lower_combined_int}};
  out["lower_scaled"] = r.lower_scaled ? Json(*r.lower_scaled) : Json(nullptr);
  out["upper"] = r.upper ? Json(*r.upper) : Json(nullptr);
  out["upper_provenance"] = r.upper ? Json(r.upper_provenance) : Json(nullptr);
  return out;
}

Json to_json(const NotCpCertificate& c) {
  Json pairs = Json::array();
  for (const auto& [i, k] : c.pairs) pairs.push_back(Json::array({i, k}));
  Json center = Json::array();
  for (Index i = 0; i < c.center.size(); ++i) center.push_back(c.center(i));
  return {{"pairs", std::move(pairs)},
          {"center", std::move(center)},
          {"odd_subset", c.odd_subset},
          {"checks", checks_to_json(c.checks)},
          {"valid", c.valid}};
}

Json to_json(const NotVnaCertificate& c) {
  return {{"subset_I", c.subset_i}, {"subset_J", c.subset_j},  {"i_star", c.i_star},
          {"j_star", c.j_star},     {"checks", checks_to_json(c.checks)}, {"valid", c.valid}};
}

Json to_json(const FullCorrelation& c) {
  Json cx = Json::array();
  for (Index i = 0; i < c.cx.size(); ++i) cx.push_back(c.cx(i));
  Json cy = Json::array();
  for (Index i = 0; i < c.cy.size(); ++i) cy.push_back(c.cy(i));
  return {{"cx", std::move(cx)}, {"cy", std::move(cy)}, {"cxy", to_json(c.cxy)}};
}

std::string dump_json(const Json& j) {
  std::ostringstream out;
  dump_into(out, j, 0);
  out << '\n';
  return out.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::InvalidInput, std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

}  // namespace cpsdlab
