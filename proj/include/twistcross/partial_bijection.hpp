#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace twistcross {

// Injective partial self-map of {1, ..., n} in tuple notation: entry i is the
// image of i + 1, or 0 where the map is undefined.
class PartialBijection {
 public:
  using value_type = std::uint32_t;

  PartialBijection() = default;
  explicit PartialBijection(std::vector<value_type> image);

  static PartialBijection identity(std::size_t degree);
  static PartialBijection empty(std::size_t degree);
  // Identity map of the given subset of {1, ..., degree}.
  static PartialBijection restriction_identity(std::size_t degree,
                                               std::vector<value_type> const& points);

  // Accepts "(a_1,...,a_n)" with optional surrounding whitespace; the
  // parentheses may be omitted.
  static PartialBijection parse(std::string_view text);

  std::size_t degree() const noexcept { return image_.size(); }

  // Image of the point x in 1..n, or 0 if x is outside the domain.
  value_type operator()(value_type x) const { return image_.at(x - 1); }

  std::vector<value_type> const& image() const noexcept { return image_; }
  std::vector<value_type>        domain() const;
  std::vector<value_type>        range() const;
  std::size_t                    rank() const;

  std::string to_string() const;

  friend bool operator==(PartialBijection const&, PartialBijection const&) = default;

 private:
  std::vector<value_type> image_;
};

// (fg)(x) = f(g(x)): the right factor is applied first.
PartialBijection compose(PartialBijection const& f, PartialBijection const& g);

inline PartialBijection compose(PartialBijection const& f,
                                PartialBijection const& g,
                                PartialBijection const& h) {
  return compose(compose(f, g), h);
}

PartialBijection star(PartialBijection const& f);

// f <= g iff f is a restriction of g, i.e. f = g f* f.
bool natural_leq(PartialBijection const& f, PartialBijection const& g);

bool is_idempotent(PartialBijection const& f);

std::ostream& operator<<(std::ostream& out, PartialBijection const& f);

}  // namespace twistcross

template <>
struct std::hash<twistcross::PartialBijection> {
  std::size_t operator()(twistcross::PartialBijection const& f) const noexcept {
    std::size_t h = f.degree();
    for (auto a : f.image()) {
      h = h * 31 + a;
    }
    return h;
  }
};
