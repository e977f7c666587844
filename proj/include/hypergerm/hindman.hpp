#ifndef HYPERGERM_HINDMAN_HPP
#define HYPERGERM_HINDMAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "hypergerm/expr.hpp"

// Finite-set sum lab: search 1..N for a set whose nonempty subset sums all
// share one color, and verify such certificates. The search is exhaustive
// and smallest-first, so the returned set is the lexicographic minimum.

namespace hypergerm {

// A finite-range coloring of 1..N. Colors are exact string keys, never
// compared as floating values.
class Coloring {
 public:
  enum class Kind { Modular, Table, Expression };

  static Coloring modular(long modulus);
  // colors[i] is the color of i+1; anything past the table is out of window.
  static Coloring table(std::vector<long> colors);
  // color of n is the exact value key of the expression at n.
  static Coloring expression(Expr e);

  // "mod:<m>" | "table:<path, one integer per line>" | "expr:<expr in n>"
  static Coloring parse(std::string_view text);

  std::string color_key(long n) const;
  std::string to_string() const;
  Kind kind() const { return kind_; }

 private:
  Coloring(Kind kind, long modulus, std::vector<long> table, std::optional<Expr> e)
      : kind_(kind), modulus_(modulus), table_(std::move(table)), expr_(std::move(e)) {}

  Kind kind_;
  long modulus_ = 0;
  std::vector<long> table_;
  std::optional<Expr> expr_;
};

struct SubsetSum {
  std::vector<long> subset;
  long sum = 0;
  std::string color;
};

// S plus the full table of its 2^|S|-1 nonempty subset sums, each carrying
// the color it got; all entries share `color`.
struct HindmanCertificate {
  std::string color;
  std::vector<long> set;
  std::vector<SubsetSum> sums;  // subset bitmask order: {s1}, {s2}, {s1,s2}, ...
};

// All subset sums of `set` under `coloring`, in bitmask order. The result is
// only a valid certificate if every color agrees; callers wanting the check
// use verify_certificate.
HindmanCertificate tabulate_certificate(const Coloring& coloring,
                                        const std::vector<long>& set);

// Smallest k-element subset of 1..window (lexicographic by element list)
// whose nonempty subset sums are monochromatic and stay within the window.
// nullopt when no such set exists. Throws WindowTooSmall when even
// {1,...,k} sums past the window.
std::optional<HindmanCertificate> search_monochromatic(const Coloring& coloring,
                                                       int k, long window);

// Recomputes every subset sum and color; true iff they all match the
// certificate's claims and share its color.
bool verify_certificate(const Coloring& coloring,
                        const HindmanCertificate& cert);

}  // namespace hypergerm

#endif
