#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace polyadic {

// A map from source positions 0..source_len-1 to target positions. Braidings
// and medialings realize as bijections; regular braidings may not.
class PosMap {
 public:
  PosMap() = default;
  PosMap(std::size_t target_len, std::vector<std::size_t> image);

  static PosMap identity(std::size_t len);

  std::size_t source_len() const { return image_.size(); }
  std::size_t target_len() const { return target_len_; }
  const std::vector<std::size_t>& image() const { return image_; }
  std::size_t operator()(std::size_t p) const { return image_.at(p); }

  bool is_bijection() const;
  bool is_identity() const;
  // Throws ContractError unless bijective.
  PosMap inverse() const;

  std::string to_string() const;

  friend bool operator==(const PosMap&, const PosMap&) = default;

 private:
  std::size_t target_len_ = 0;
  std::vector<std::size_t> image_;
};

// g after f. Throws ContractError if f's target is not g's source.
PosMap compose(const PosMap& g, const PosMap& f);
// f then g.
inline PosMap then(const PosMap& f, const PosMap& g) { return compose(g, f); }

// Blocks of the given lengths, block k moved to slot perm[k].
PosMap block_permutation(std::span<const std::size_t> lengths, std::span<const unsigned> perm);

// n-ary braiding realization: child k of an n-fold product goes to slot sigma[k].
PosMap braiding_perm(std::span<const std::size_t> lengths, std::span<const unsigned> sigma);

// Medialing on n*n blocks (row-major): block (i,j) goes to slot (j,i).
PosMap medialing_perm(unsigned n, std::span<const std::size_t> lengths);

// Row-major transpose permutation of n*n points.
std::vector<unsigned> transpose_permutation(unsigned n);

// Order-reversing permutation of n points.
std::vector<unsigned> reversal(unsigned n);

// Side-by-side maps on concatenated words (the tensor of morphisms).
PosMap tensor(std::span<const PosMap> parts);

// sigma on strands offset..offset+n-1 of `strands`, identity elsewhere.
PosMap embed(std::span<const unsigned> sigma, std::size_t strands, std::size_t offset);

}  // namespace polyadic
