#include "polyadic/pos_map.hpp"

#include <sstream>

#include "polyadic/errors.hpp"

namespace polyadic {

PosMap::PosMap(std::size_t target_len, std::vector<std::size_t> image)
    : target_len_(target_len), image_(std::move(image)) {
  for (auto p : image_)
    if (p >= target_len_) throw ContractError("position map leaves its target");
}

PosMap PosMap::identity(std::size_t len) {
  std::vector<std::size_t> img(len);
  for (std::size_t i = 0; i < len; ++i) img[i] = i;
  return PosMap(len, std::move(img));
}

bool PosMap::is_bijection() const {
  if (source_len() != target_len_) return false;
  std::vector<bool> hit(target_len_, false);
  for (auto p : image_) {
    if (hit[p]) return false;
    hit[p] = true;
  }
  return true;
}

bool PosMap::is_identity() const {
  if (source_len() != target_len_) return false;
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

PosMap PosMap::inverse() const {
  if (!is_bijection()) throw ContractError("position map is not invertible");
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
  return PosMap(target_len_, std::move(inv));
}

std::string PosMap::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < image_.size(); ++i) os << (i ? "," : "") << image_[i];
  os << ")->" << target_len_;
  return os.str();
}

PosMap compose(const PosMap& g, const PosMap& f) {
  if (f.target_len() != g.source_len()) throw ContractError("position maps are not composable");
  std::vector<std::size_t> img(f.source_len());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = g(f(i));
  return PosMap(g.target_len(), std::move(img));
}

PosMap block_permutation(std::span<const std::size_t> lengths, std::span<const unsigned> perm) {
  const std::size_t k = lengths.size();
  if (perm.size() != k) throw ContractError("block permutation has the wrong size");
  std::vector<std::size_t> slot_len(k, 0);
  std::vector<bool> used(k, false);
  for (std::size_t b = 0; b < k; ++b) {
    if (perm[b] >= k || used[perm[b]]) throw ContractError("not a permutation");
    used[perm[b]] = true;
    slot_len[perm[b]] = lengths[b];
  }
  std::vector<std::size_t> slot_offset(k, 0);
  for (std::size_t s = 1; s < k; ++s) slot_offset[s] = slot_offset[s - 1] + slot_len[s - 1];
  std::vector<std::size_t> img;
  std::size_t total = 0;
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t j = 0; j < lengths[b]; ++j) img.push_back(slot_offset[perm[b]] + j);
    total += lengths[b];
  }
  return PosMap(total, std::move(img));
}

PosMap braiding_perm(std::span<const std::size_t> lengths, std::span<const unsigned> sigma) {
  return block_permutation(lengths, sigma);
}

std::vector<unsigned> transpose_permutation(unsigned n) {
  std::vector<unsigned> p(static_cast<std::size_t>(n) * n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) p[i * n + j] = j * n + i;
  return p;
}

std::vector<unsigned> reversal(unsigned n) {
  std::vector<unsigned> p(n);
  for (unsigned i = 0; i < n; ++i) p[i] = n - 1 - i;
  return p;
}

PosMap medialing_perm(unsigned n, std::span<const std::size_t> lengths) {
  if (lengths.size() != static_cast<std::size_t>(n) * n) throw ContractError("medialing needs n*n blocks");
  const auto p = transpose_permutation(n);
  return block_permutation(lengths, p);
}

PosMap tensor(std::span<const PosMap> parts) {
  std::vector<std::size_t> img;
  std::size_t offset = 0;
  for (const auto& m : parts) {
    for (auto q : m.image()) img.push_back(offset + q);
    offset += m.target_len();
  }
  return PosMap(offset, std::move(img));
}

PosMap embed(std::span<const unsigned> sigma, std::size_t strands, std::size_t offset) {
  if (offset + sigma.size() > strands) throw ContractError("embedding leaves the strands");
  std::vector<std::size_t> img(strands);
  for (std::size_t i = 0; i < strands; ++i) img[i] = i;
  for (std::size_t k = 0; k < sigma.size(); ++k) img[offset + k] = offset + sigma[k];
  return PosMap(strands, std::move(img));
}

}  // namespace polyadic
