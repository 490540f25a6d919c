#include "algebra_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "errors.hpp"

namespace gpi {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

struct ProdKey {
  unsigned i, j;
  bool operator<(const ProdKey& o) const { return std::tie(i, j) < std::tie(o.i, o.j); }
};

}  // namespace

GradedAlgebra parse_algebra_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  std::string name;
  std::vector<std::string> labels;
  std::vector<unsigned> table;
  std::vector<std::string> basis_names;
  std::vector<unsigned> grades;
  std::map<ProdKey, QVec> prods;
  bool saw_table = false, saw_basis = false;

  auto label_index = [&](const std::string& tok) -> unsigned {
    for (unsigned i = 0; i < labels.size(); ++i) {
      if (labels[i] == tok) return i;
    }
    throw ParseError(lineno, "unknown grading label '" + tok + "'");
  };
  auto basis_index = [&](const std::string& tok) -> unsigned {
    for (unsigned i = 0; i < basis_names.size(); ++i) {
      if (basis_names[i] == tok) return i;
    }
    throw ParseError(lineno, "unknown basis name '" + tok + "'");
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(lineno, "expected 'directive: ...'");
    std::string directive = strip(line.substr(0, colon));
    std::string rest = strip(line.substr(colon + 1));

    if (directive == "name") {
      name = rest;
    } else if (directive == "labels") {
      if (!labels.empty()) throw ParseError(lineno, "duplicate labels directive");
      for (const auto& tok : split_ws(rest)) {
        if (!valid_name(tok)) throw ParseError(lineno, "invalid label '" + tok + "'");
        for (const auto& l : labels) {
          if (l == tok) throw ParseError(lineno, "duplicate label '" + tok + "'");
        }
        labels.push_back(tok);
      }
      if (labels.empty()) throw ParseError(lineno, "labels directive needs at least one label");
    } else if (directive == "table") {
      if (labels.empty()) throw ParseError(lineno, "table before labels");
      if (saw_table) throw ParseError(lineno, "duplicate table directive");
      saw_table = true;
      std::vector<std::vector<std::string>> rows;
      rows.emplace_back();
      for (const auto& tok : split_ws(rest)) {
        if (tok == "/") {
          rows.emplace_back();
        } else {
          rows.back().push_back(tok);
        }
      }
      if (rows.size() != labels.size()) {
        throw ParseError(lineno, "table needs " + std::to_string(labels.size()) + " rows, got " +
                                     std::to_string(rows.size()));
      }
      for (const auto& r : rows) {
        if (r.size() != labels.size()) {
          throw ParseError(lineno, "table row needs " + std::to_string(labels.size()) + " entries");
        }
        for (const auto& tok : r) table.push_back(label_index(tok));
      }
    } else if (directive == "basis") {
      if (labels.empty()) throw ParseError(lineno, "basis before labels");
      if (saw_basis) throw ParseError(lineno, "duplicate basis directive");
      saw_basis = true;
      for (const auto& tok : split_ws(rest)) {
        auto at = tok.find('@');
        if (at == std::string::npos) throw ParseError(lineno, "basis entry '" + tok + "' needs name@label");
        std::string bn = tok.substr(0, at);
        std::string lb = tok.substr(at + 1);
        if (!valid_name(bn)) throw ParseError(lineno, "invalid basis name '" + bn + "'");
        for (const auto& b : basis_names) {
          if (b == bn) throw ParseError(lineno, "duplicate basis name '" + bn + "'");
        }
        basis_names.push_back(bn);
        grades.push_back(label_index(lb));
      }
      if (basis_names.empty()) throw ParseError(lineno, "basis directive needs at least one vector");
    } else if (directive == "prod") {
      if (!saw_basis) throw ParseError(lineno, "prod before basis");
      auto eq = rest.find('=');
      if (eq == std::string::npos) throw ParseError(lineno, "prod needs '='");
      std::string lhs = strip(rest.substr(0, eq));
      std::string rhs = strip(rest.substr(eq + 1));
      auto star = lhs.find('*');
      if (star == std::string::npos) throw ParseError(lineno, "prod left side needs 'a*b'");
      unsigned bi = basis_index(strip(lhs.substr(0, star)));
      unsigned bj = basis_index(strip(lhs.substr(star + 1)));
      ProdKey key{bi, bj};
      if (prods.count(key)) {
        throw ParseError(lineno, "duplicate product " + basis_names[bi] + "*" + basis_names[bj]);
      }
      QVec row(basis_names.size(), Rational(0));
      if (rhs != "0") {
        // terms separated by '+'; each term "[coeff] name"
        std::vector<std::string> terms;
        std::string cur;
        for (const auto& tok : split_ws(rhs)) {
          if (tok == "+") {
            terms.push_back(strip(cur));
            cur.clear();
          } else {
            cur += (cur.empty() ? "" : " ") + tok;
          }
        }
        terms.push_back(strip(cur));
        for (const auto& term : terms) {
          if (term.empty()) throw ParseError(lineno, "empty term in product right side");
          auto toks = split_ws(term);
          Rational coeff(1);
          std::string bname;
          if (toks.size() == 1) {
            bname = toks[0];
          } else if (toks.size() == 2) {
            auto q = parse_rational(toks[0]);
            if (!q) throw ParseError(lineno, "bad coefficient '" + toks[0] + "'");
            coeff = *q;
            bname = toks[1];
          } else {
            throw ParseError(lineno, "term '" + term + "' must be '[coeff] name'");
          }
          unsigned bl = basis_index(bname);
          if (row[bl] != 0) throw ParseError(lineno, "basis vector '" + bname + "' repeated in one product");
          row[bl] = coeff;
        }
      }
      prods.emplace(key, std::move(row));
    } else {
      throw ParseError(lineno, "unknown directive '" + directive + "'");
    }
  }
  if (labels.empty()) throw ParseError(lineno, "missing labels directive");
  if (!saw_table) throw ParseError(lineno, "missing table directive");
  if (!saw_basis) throw ParseError(lineno, "missing basis directive");

  std::vector<std::tuple<unsigned, unsigned, unsigned, Rational>> sparse;
  for (const auto& [key, row] : prods) {
    for (unsigned l = 0; l < row.size(); ++l) {
      if (row[l] != 0) sparse.emplace_back(key.i, key.j, l, row[l]);
    }
  }
  GradedAlgebra A(name.empty() ? "unnamed" : name, OperationTable(labels, table), basis_names, grades,
                  sparse);
  auto vr = A.validate();
  if (!vr.ok) {
    std::ostringstream os;
    os << "grading violated by " << vr.violations.size() << " structure constant(s):";
    for (const auto& v : vr.violations) {
      os << " (" << A.basis_names()[v.i] << "*" << A.basis_names()[v.j] << " -> "
         << A.basis_names()[v.l] << ")";
    }
    throw ValidationError(os.str());
  }
  return A;
}

GradedAlgebra parse_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra_text(ss.str());
}

std::string export_algebra(const GradedAlgebra& A) {
  std::ostringstream os;
  os << "name: " << A.name() << "\n";
  os << "labels:";
  for (const auto& l : A.table().labels()) os << ' ' << l;
  os << "\n";
  os << "table:";
  unsigned t = A.table().size();
  for (unsigned i = 0; i < t; ++i) {
    if (i) os << " /";
    for (unsigned j = 0; j < t; ++j) os << ' ' << A.table().label(A.table().product(i, j));
  }
  os << "\n";
  os << "basis:";
  for (unsigned i = 0; i < A.dim(); ++i) {
    os << ' ' << A.basis_names()[i] << '@' << A.table().label(A.grade(i));
  }
  os << "\n";
  for (unsigned i = 0; i < A.dim(); ++i) {
    for (unsigned j = 0; j < A.dim(); ++j) {
      const QVec& row = A.product_row(i, j);
      if (is_zero_vec(row)) continue;
      os << "prod: " << A.basis_names()[i] << '*' << A.basis_names()[j] << " =";
      bool first = true;
      for (unsigned l = 0; l < row.size(); ++l) {
        if (row[l] == 0) continue;
        if (!first) os << " +";
        first = false;
        if (row[l] == 1) {
          os << ' ' << A.basis_names()[l];
        } else {
          os << ' ' << rational_str(row[l]) << ' ' << A.basis_names()[l];
        }
      }
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace gpi
