#ifndef DBLPLANE_PERM_HPP
#define DBLPLANE_PERM_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace dblplane {

// Permutation of {0..n-1}, stored as the image sequence.
class Perm {
 public:
  explicit Perm(std::size_t degree = 1);
  explicit Perm(std::vector<unsigned> images);
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<unsigned>>& cycles);

  std::size_t degree() const { return images_.size(); }
  unsigned operator[](unsigned point) const { return images_[point]; }
  const std::vector<unsigned>& images() const { return images_; }

  // (a*b)(x) = a(b(x)); b acts first.
  friend Perm operator*(const Perm& a, const Perm& b);
  Perm inverse() const;
  bool is_identity() const;
  std::size_t order() const;

  friend bool operator==(const Perm& a, const Perm& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) {
    return a.images_ < b.images_;
  }

  std::string cycle_string() const;

 private:
  std::vector<unsigned> images_;
};

}  // namespace dblplane

#endif
