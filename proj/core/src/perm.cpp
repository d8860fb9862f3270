#include "dblplane/perm.hpp"

#include <algorithm>
#include <stdexcept>

namespace dblplane {

Perm::Perm(std::size_t degree) : images_(degree) {
  if (degree == 0) throw std::invalid_argument("Perm: degree must be >= 1");
  for (std::size_t i = 0; i < degree; ++i) images_[i] = static_cast<unsigned>(i);
}

Perm::Perm(std::vector<unsigned> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("Perm: degree must be >= 1");
  std::vector<char> seen(images_.size(), 0);
  for (unsigned v : images_) {
    if (v >= images_.size() || seen[v])
      throw std::invalid_argument("Perm: image sequence is not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::from_cycles(std::size_t degree,
                       const std::vector<std::vector<unsigned>>& cycles) {
  std::vector<unsigned> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<unsigned>(i);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      unsigned from = cyc[i];
      unsigned to = cyc[(i + 1) % cyc.size()];
      if (from >= degree) throw std::invalid_argument("Perm: cycle point out of range");
      img[from] = to;
    }
  }
  return Perm(std::move(img));
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("Perm: degree mismatch in product");
  std::vector<unsigned> img(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i)
    img[i] = a.images_[b.images_[i]];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<unsigned> img(degree());
  for (std::size_t i = 0; i < degree(); ++i)
    img[images_[i]] = static_cast<unsigned>(i);
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::size_t Perm::order() const {
  Perm p = *this;
  std::size_t n = 1;
  while (!p.is_identity()) {
    p = p * (*this);
    ++n;
  }
  return n;
}

std::string Perm::cycle_string() const {
  std::string out;
  std::vector<char> seen(degree(), 0);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += "(";
    unsigned j = static_cast<unsigned>(i);
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += " ";
      out += std::to_string(j);
      first = false;
      j = images_[j];
    }
    out += ")";
  }
  if (out.empty()) out = "e";
  return out;
}

}  // namespace dblplane
