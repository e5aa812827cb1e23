#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <string>
#include <vector>

namespace grr {

// Automorphism group orders outgrow 64 bits quickly (the empty graph on
// 21 vertices already does).
using GroupOrder = boost::multiprecision::cpp_int;

/// A bijection of {0, ..., n-1}, stored as its image table.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `image` is a bijection.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(image_.size()); }
  int operator()(int x) const { return image_[x]; }
  std::span<const int> image() const { return image_; }
  bool is_identity() const;

  /// `first` applied, then `second`: (first.then(second))(x) = second(first(x)).
  Permutation then(const Permutation& second) const;
  Permutation inverse() const;

  // Cycle notation on 0-based points, "()" for the identity.
  std::string cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// Base and strong generating set built by deterministic Schreier-Sims.
class StabilizerChain {
 public:
  /// Throws std::invalid_argument when the generators disagree on degree.
  StabilizerChain(int degree, std::span<const Permutation> generators);

  int degree() const { return degree_; }
  const std::vector<int>& base() const { return base_; }
  // Basic orbit lengths; their product is the group order.
  std::vector<int> orbit_sizes() const;
  GroupOrder order() const;
  bool contains(const Permutation& p) const;

 private:
  struct Level {
    int point;
    std::vector<Permutation> generators;
    // transversal[x] maps `point` to x, for x in the basic orbit.
    std::vector<Permutation> transversal;
    std::vector<int> orbit;
    std::vector<char> in_orbit;
  };

  void rebuild_orbit(Level& level) const;
  // Returns the residue and the level where sifting stopped.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const;
  void add_level(int point);

  int degree_;
  std::vector<int> base_;
  std::vector<Level> levels_;
};

/// Order of the group generated by `generators` (1 when there are none).
GroupOrder group_order(std::span<const Permutation> generators);

/// A permutation group given by generators, with its order and the base that
/// produced it.
struct PermGroup {
  int degree = 0;
  std::vector<Permutation> generators;
  GroupOrder order = 1;
  std::vector<int> base;
};

}  // namespace grr
