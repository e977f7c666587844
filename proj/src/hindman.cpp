#include "hypergerm/hindman.hpp"

#include <fstream>
#include <sstream>

#include "hypergerm/bigreal.hpp"
#include "hypergerm/errors.hpp"

namespace hypergerm {

namespace {

// Exact key for a color value: integers print as integers, everything else
// as a 30 digit decimal. Deterministic for identical inputs, which is all
// key equality needs.
std::string value_key(const BigReal& v) {
  BigReal fl = floor(v);
  if (fl == v && abs(v) < BigReal("1e30")) {
    return fl.convert_to<BigInt>().str();
  }
  return v.str(30);
}

}  // namespace

Coloring Coloring::modular(long modulus) {
  if (modulus < 1) throw DomainError("modulus must be positive");
  return Coloring(Kind::Modular, modulus, {}, std::nullopt);
}

Coloring Coloring::table(std::vector<long> colors) {
  if (colors.empty()) throw DomainError("color table must be nonempty");
  return Coloring(Kind::Table, 0, std::move(colors), std::nullopt);
}

Coloring Coloring::expression(Expr e) {
  return Coloring(Kind::Expression, 0, {}, std::move(e));
}

Coloring Coloring::parse(std::string_view text) {
  if (text.rfind("mod:", 0) == 0) {
    std::string rest(text.substr(4));
    std::size_t used = 0;
    long m = 0;
    try {
      m = std::stol(rest, &used);
    } catch (const std::exception&) {
      throw DomainError("mod: wants an integer modulus");
    }
    if (used != rest.size()) throw DomainError("mod: wants an integer modulus");
    return modular(m);
  }
  if (text.rfind("table:", 0) == 0) {
    std::string path(text.substr(6));
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read color table '" + path + "'");
    std::vector<long> colors;
    long c;
    while (in >> c) colors.push_back(c);
    if (!in.eof()) {
      throw DomainError("color table '" + path + "' has a non-integer entry");
    }
    return table(std::move(colors));
  }
  if (text.rfind("expr:", 0) == 0) {
    return expression(parse_expr(text.substr(5), {"n"}));
  }
  throw DomainError("unrecognized coloring '" + std::string(text) +
                    "' (want mod:<m>, table:<path> or expr:<expr>)");
}

std::string Coloring::color_key(long n) const {
  if (n < 1) throw DomainError("colorings are defined on positive integers");
  switch (kind_) {
    case Kind::Modular:
      return std::to_string(n % modulus_);
    case Kind::Table:
      if (static_cast<std::size_t>(n) > table_.size()) {
        throw WindowTooSmall("color table covers 1.." +
                             std::to_string(table_.size()) + " but " +
                             std::to_string(n) + " was asked for");
      }
      return std::to_string(table_[n - 1]);
    case Kind::Expression:
      return value_key(eval_expr(*expr_, BigReal(n)));
  }
  throw DomainError("unreachable coloring kind");
}

std::string Coloring::to_string() const {
  switch (kind_) {
    case Kind::Modular:
      return "mod:" + std::to_string(modulus_);
    case Kind::Table: {
      std::ostringstream out;
      out << "table[" << table_.size() << "]";
      return out.str();
    }
    case Kind::Expression:
      return "expr:" + print_expr(*expr_, {"n"});
  }
  return "";
}

HindmanCertificate tabulate_certificate(const Coloring& coloring,
                                        const std::vector<long>& set) {
  if (set.empty()) throw DomainError("certificate set must be nonempty");
  if (set.size() > 20) throw DomainError("certificate sets beyond 20 elements are not desk scale");
  for (std::size_t i = 1; i < set.size(); ++i) {
    if (set[i] <= set[i - 1]) {
      throw DomainError("certificate set must be strictly increasing");
    }
  }
  HindmanCertificate cert;
  cert.set = set;
  cert.color = coloring.color_key(set[0]);
  std::size_t total = (std::size_t{1} << set.size()) - 1;
  for (std::size_t mask = 1; mask <= total; ++mask) {
    SubsetSum entry;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (mask & (std::size_t{1} << i)) {
        entry.subset.push_back(set[i]);
        entry.sum += set[i];
      }
    }
    entry.color = coloring.color_key(entry.sum);
    cert.sums.push_back(std::move(entry));
  }
  return cert;
}

namespace {

struct Search {
  const Coloring& coloring;
  int k;
  long window;
  std::vector<long> chosen;
  std::vector<long> sums;  // every nonempty subset sum of `chosen`
  long total = 0;
  std::string color;

  bool extend(long from) {
    if (static_cast<int>(chosen.size()) == k) return true;
    long remaining = k - static_cast<long>(chosen.size());
    for (long n = from;; ++n) {
      // Taking n now forces at least n+1, ..., n+remaining-1 later; if even
      // that minimal completion sums past the window, larger n is hopeless.
      long completion = remaining * n + remaining * (remaining - 1) / 2;
      if (total + completion > window) return false;

      std::string cn = coloring.color_key(n);
      if (chosen.empty()) color = cn;
      if (cn != color) continue;

      bool mono = true;
      for (long s : sums) {
        // s + n <= total + n <= window by the completion bound above
        if (coloring.color_key(s + n) != color) {
          mono = false;
          break;
        }
      }
      if (!mono) continue;

      std::size_t added_from = sums.size();
      chosen.push_back(n);
      sums.push_back(n);
      for (std::size_t i = 0; i < added_from; ++i) sums.push_back(sums[i] + n);
      total += n;
      if (extend(n + 1)) return true;
      total -= n;
      sums.resize(added_from);
      chosen.pop_back();
    }
  }
};

}  // namespace

std::optional<HindmanCertificate> search_monochromatic(const Coloring& coloring,
                                                       int k, long window) {
  if (k < 1) throw DomainError("need at least one element");
  if (k > 20) throw DomainError("sets beyond 20 elements are not desk scale");
  if (window < 1) throw DomainError("window must be positive");
  long triangle = static_cast<long>(k) * (k + 1) / 2;
  if (triangle > window) {
    throw WindowTooSmall("the " + std::to_string(k) +
                         " smallest elements already sum to " +
                         std::to_string(triangle) + " > window " +
                         std::to_string(window));
  }
  Search search{coloring, k, window, {}, {}, 0, ""};
  if (!search.extend(1)) return std::nullopt;
  return tabulate_certificate(coloring, search.chosen);
}

bool verify_certificate(const Coloring& coloring,
                        const HindmanCertificate& cert) {
  HindmanCertificate fresh = tabulate_certificate(coloring, cert.set);
  if (fresh.sums.size() != cert.sums.size()) return false;
  for (std::size_t i = 0; i < fresh.sums.size(); ++i) {
    if (fresh.sums[i].sum != cert.sums[i].sum) return false;
    if (fresh.sums[i].subset != cert.sums[i].subset) return false;
    if (fresh.sums[i].color != cert.color) return false;
    if (cert.sums[i].color != cert.color) return false;
  }
  return fresh.color == cert.color;
}

}  // namespace hypergerm
