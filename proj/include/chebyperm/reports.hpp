#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chebyperm/bounds.hpp"
#include "chebyperm/codes.hpp"
#include "chebyperm/identities.hpp"
#include "chebyperm/matrices.hpp"

namespace chebyperm {

enum class OutputFormat { table, json, csv };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "table") return OutputFormat::table;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw std::domain_error("unknown format: " + s);
}

// Exact integers are always serialized as full decimal strings.  Doubles use
// nlohmann's shortest round-trip form in json and %.12g elsewhere.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct VolumeReport {
  long long d = 0;
  long long n = 0;
  BigInt volume;

  friend bool operator==(const VolumeReport&, const VolumeReport&) = default;
};

inline void emit_volume(std::ostream& os, const VolumeReport& r, OutputFormat f) {
  switch (f) {
    case OutputFormat::table:
      os << "V(" << r.d << "," << r.n << ") = " << r.volume << "\n";
      break;
    case OutputFormat::json: {
      nlohmann::json j{{"d", r.d}, {"n", r.n}, {"volume", r.volume.str()}};
      os << j.dump() << "\n";
      break;
    }
    case OutputFormat::csv:
      os << "d,n,volume\n" << r.d << "," << r.n << "," << r.volume << "\n";
      break;
  }
}

inline VolumeReport parse_volume_json(const std::string& s) {
  const auto j = nlohmann::json::parse(s);
  return {j.at("d").get<long long>(), j.at("n").get<long long>(),
          BigInt(j.at("volume").get<std::string>())};
}

namespace detail {

inline std::string params_key(const std::map<std::string, long long>& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ";";
    out += k + "=" + std::to_string(v);
  }
  return out;
}

}  // namespace detail

inline void emit_identity_reports(std::ostream& os, const std::vector<IdentityReport>& rs,
                                  OutputFormat f) {
  switch (f) {
    case OutputFormat::table:
      for (const auto& r : rs) {
        os << (r.holds() ? "ok   " : "FAIL ") << r.name;
        for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
        os << "  lhs=" << r.lhs << " rhs=" << r.rhs << "\n";
      }
      break;
    case OutputFormat::json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : rs) {
        nlohmann::json p = nlohmann::json::object();
        for (const auto& [k, v] : r.params) p[k] = v;
        arr.push_back({{"name", r.name},
                       {"params", p},
                       {"lhs", r.lhs.str()},
                       {"rhs", r.rhs.str()},
                       {"holds", r.holds()}});
      }
      os << arr.dump() << "\n";
      break;
    }
    case OutputFormat::csv:
      os << "name,params,lhs,rhs,holds\n";
      for (const auto& r : rs)
        os << r.name << "," << detail::params_key(r.params) << "," << r.lhs << "," << r.rhs
           << "," << (r.holds() ? "true" : "false") << "\n";
      break;
  }
}

inline std::vector<IdentityReport> parse_identity_reports_json(const std::string& s) {
  const auto arr = nlohmann::json::parse(s);
  std::vector<IdentityReport> out;
  for (const auto& j : arr) {
    IdentityReport r;
    r.name = j.at("name").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) r.params[k] = v.get<long long>();
    r.lhs = BigInt(j.at("lhs").get<std::string>());
    r.rhs = BigInt(j.at("rhs").get<std::string>());
    out.push_back(std::move(r));
  }
  return out;
}

inline void emit_bound_report(std::ostream& os, const BoundReport& r, OutputFormat f) {
  switch (f) {
    case OutputFormat::table:
      os << "d = " << r.d << "\n"
         << "n = " << r.n << "\n"
         << "ln_old = " << format_double(r.ln_old) << "\n"
         << "ln_new = " << format_double(r.ln_new) << "\n"
         << "ln_omega_d = " << format_double(r.ln_omega_d) << "\n";
      if (r.ln_exact) os << "ln_exact = " << format_double(*r.ln_exact) << "\n";
      break;
    case OutputFormat::json: {
      nlohmann::json j{{"d", r.d},
                       {"n", r.n},
                       {"ln_old", r.ln_old},
                       {"ln_new", r.ln_new},
                       {"ln_omega_d", r.ln_omega_d}};
      j["ln_exact"] = r.ln_exact ? nlohmann::json(*r.ln_exact) : nlohmann::json(nullptr);
      os << j.dump() << "\n";
      break;
    }
    case OutputFormat::csv:
      os << "d,n,ln_old,ln_new,ln_omega_d,ln_exact\n"
         << r.d << "," << r.n << "," << format_double(r.ln_old) << ","
         << format_double(r.ln_new) << "," << format_double(r.ln_omega_d) << ",";
      if (r.ln_exact) os << format_double(*r.ln_exact);
      os << "\n";
      break;
  }
}

inline BoundReport parse_bound_report_json(const std::string& s) {
  const auto j = nlohmann::json::parse(s);
  BoundReport r;
  r.d = j.at("d").get<long long>();
  r.n = j.at("n").get<long long>();
  r.ln_old = j.at("ln_old").get<double>();
  r.ln_new = j.at("ln_new").get<double>();
  r.ln_omega_d = j.at("ln_omega_d").get<double>();
  if (!j.at("ln_exact").is_null()) r.ln_exact = j.at("ln_exact").get<double>();
  return r;
}

inline void emit_code_bounds(std::ostream& os, const CodeBoundsReport& r, OutputFormat f) {
  switch (f) {
    case OutputFormat::table:
      os << "gv_floor = " << r.gv_floor << "\n"
         << "packing_ceiling = " << r.packing_ceiling << "\n";
      break;
    case OutputFormat::json: {
      nlohmann::json j{{"n", r.n},
                       {"dist", r.dist},
                       {"gv_floor", r.gv_floor.str()},
                       {"packing_ceiling", r.packing_ceiling.str()}};
      os << j.dump() << "\n";
      break;
    }
    case OutputFormat::csv:
      os << "n,dist,gv_floor,packing_ceiling\n"
         << r.n << "," << r.dist << "," << r.gv_floor << "," << r.packing_ceiling << "\n";
      break;
  }
}

inline CodeBoundsReport parse_code_bounds_json(const std::string& s) {
  const auto j = nlohmann::json::parse(s);
  return {j.at("n").get<long long>(), j.at("dist").get<long long>(),
          BigInt(j.at("gv_floor").get<std::string>()),
          BigInt(j.at("packing_ceiling").get<std::string>())};
}

inline void emit_crossover(std::ostream& os, const CrossoverReport& r, OutputFormat f) {
  switch (f) {
    case OutputFormat::table:
      if (r.crossover)
        os << "crossover = " << *r.crossover << "\n";
      else
        os << "crossover = none\n";
      break;
    case OutputFormat::json: {
      nlohmann::json j{{"d", r.d}, {"n_max", r.n_max}};
      j["crossover"] = r.crossover ? nlohmann::json(*r.crossover) : nlohmann::json(nullptr);
      os << j.dump() << "\n";
      break;
    }
    case OutputFormat::csv:
      os << "d,n_max,crossover\n" << r.d << "," << r.n_max << ",";
      if (r.crossover) os << *r.crossover;
      os << "\n";
      break;
  }
}

inline CrossoverReport parse_crossover_json(const std::string& s) {
  const auto j = nlohmann::json::parse(s);
  CrossoverReport r;
  r.d = j.at("d").get<long long>();
  r.n_max = j.at("n_max").get<long long>();
  if (!j.at("crossover").is_null()) r.crossover = j.at("crossover").get<long long>();
  return r;
}

struct CodeSearchReport {
  long long n = 0;
  long long dist = 0;
  std::string method;
  std::string order;
  std::vector<Permutation> words;

  friend bool operator==(const CodeSearchReport&, const CodeSearchReport&) = default;
};

inline void emit_code_search(std::ostream& os, const CodeSearchReport& r, OutputFormat f,
                             bool show_words) {
  switch (f) {
    case OutputFormat::table:
      os << "size = " << r.words.size() << "\n";
      if (show_words)
        for (const auto& w : r.words) {
          for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
          os << "\n";
        }
      break;
    case OutputFormat::json: {
      nlohmann::json words = nlohmann::json::array();
      for (const auto& w : r.words) words.push_back(w);
      nlohmann::json j{{"n", r.n},
                       {"dist", r.dist},
                       {"method", r.method},
                       {"order", r.order},
                       {"size", r.words.size()},
                       {"words", words}};
      os << j.dump() << "\n";
      break;
    }
    case OutputFormat::csv:
      os << "n,dist,method,order,size\n"
         << r.n << "," << r.dist << "," << r.method << "," << r.order << "," << r.words.size()
         << "\n";
      break;
  }
}

inline CodeSearchReport parse_code_search_json(const std::string& s) {
  const auto j = nlohmann::json::parse(s);
  CodeSearchReport r;
  r.n = j.at("n").get<long long>();
  r.dist = j.at("dist").get<long long>();
  r.method = j.at("method").get<std::string>();
  r.order = j.at("order").get<std::string>();
  for (const auto& w : j.at("words")) r.words.push_back(w.get<Permutation>());
  return r;
}

inline void emit_matrix(std::ostream& os, const IntMatrix& m, OutputFormat f) {
  switch (f) {
    case OutputFormat::table: {
      std::size_t width = 1;
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
          width = std::max(width, std::to_string(m(i, j)).size());
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          const std::string e = std::to_string(m(i, j));
          if (j) os << " ";
          os << std::string(width - e.size(), ' ') << e;
        }
        os << "\n";
      }
      break;
    }
    case OutputFormat::json: {
      nlohmann::json rows = nlohmann::json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
      }
      os << rows.dump() << "\n";
      break;
    }
    case OutputFormat::csv:
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
        os << "\n";
      }
      break;
  }
}

inline IntMatrix parse_int_matrix_json(const std::string& s) {
  const auto j = nlohmann::json::parse(s);
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t jj = 0; jj < cols; ++jj) m(i, jj) = j.at(i).at(jj).get<int>();
  return m;
}

inline void emit_matrix(std::ostream& os, const PolyMatrix& m, OutputFormat f) {
  switch (f) {
    case OutputFormat::table: {
      std::size_t width = 1;
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
          width = std::max(width, m(i, j).str().size());
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          const std::string e = m(i, j).str();
          if (j) os << " ";
          os << std::string(width - e.size(), ' ') << e;
        }
        os << "\n";
      }
      break;
    }
    case OutputFormat::json: {
      nlohmann::json rows = nlohmann::json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
      }
      os << rows.dump() << "\n";
      break;
    }
    case OutputFormat::csv:
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).str();
        os << "\n";
      }
      break;
  }
}

// Coefficients low-to-high as a JSON array of exact decimal strings, the
// same in every output format.
inline void emit_poly_coeffs(std::ostream& os, const IntPolynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.str());
  os << arr.dump() << "\n";
}

inline IntPolynomial parse_poly_coeffs_json(const std::string& s) {
  const auto j = nlohmann::json::parse(s);
  std::vector<BigInt> c;
  for (const auto& e : j) c.emplace_back(e.get<std::string>());
  return IntPolynomial(std::move(c));
}

}  // namespace chebyperm
