#include "twistcross/partial_bijection.hpp"

#include <cctype>
#include <charconv>
#include <ostream>

#include "twistcross/error.hpp"

namespace twistcross {

PartialBijection::PartialBijection(std::vector<value_type> image) : image_(std::move(image)) {
  std::size_t const  n = image_.size();
  std::vector<bool>  hit(n + 1, false);
  for (std::size_t i = 0; i < n; ++i) {
    value_type a = image_[i];
    if (a > n) {
      throw InputError("partial bijection: entry " + std::to_string(a) + " at position "
                       + std::to_string(i + 1) + " exceeds degree " + std::to_string(n));
    }
    if (a != 0) {
      if (hit[a]) {
        throw InputError("partial bijection: duplicate image " + std::to_string(a));
      }
      hit[a] = true;
    }
  }
}

PartialBijection PartialBijection::identity(std::size_t degree) {
  std::vector<value_type> im(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    im[i] = static_cast<value_type>(i + 1);
  }
  return PartialBijection(std::move(im));
}

PartialBijection PartialBijection::empty(std::size_t degree) {
  return PartialBijection(std::vector<value_type>(degree, 0));
}

PartialBijection PartialBijection::restriction_identity(std::size_t                    degree,
                                                        std::vector<value_type> const& points) {
  std::vector<value_type> im(degree, 0);
  for (auto p : points) {
    if (p == 0 || p > degree) {
      throw InputError("partial bijection: point " + std::to_string(p) + " out of range");
    }
    im[p - 1] = p;
  }
  return PartialBijection(std::move(im));
}

PartialBijection PartialBijection::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
      s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
      s.remove_suffix(1);
    }
    return s;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') {
      throw InputError("partial bijection: unbalanced parentheses in '" + std::string(text) + "'");
    }
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<value_type> im;
  if (text.empty()) {
    return PartialBijection(std::move(im));
  }
  while (true) {
    auto             comma = text.find(',');
    std::string_view tok   = trim(text.substr(0, comma));
    value_type       v     = 0;
    auto [ptr, ec]         = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw InputError("partial bijection: bad entry '" + std::string(tok) + "'");
    }
    im.push_back(v);
    if (comma == std::string_view::npos) {
      break;
    }
    text = text.substr(comma + 1);
  }
  return PartialBijection(std::move(im));
}

std::vector<PartialBijection::value_type> PartialBijection::domain() const {
  std::vector<value_type> out;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != 0) {
      out.push_back(static_cast<value_type>(i + 1));
    }
  }
  return out;
}

std::vector<PartialBijection::value_type> PartialBijection::range() const {
  std::vector<value_type> out;
  for (auto a : image_) {
    if (a != 0) {
      out.push_back(a);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t PartialBijection::rank() const {
  return static_cast<std::size_t>(std::count_if(image_.begin(), image_.end(),
                                                [](value_type a) { return a != 0; }));
}

std::string PartialBijection::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(image_[i]);
  }
  return out + ")";
}

PartialBijection compose(PartialBijection const& f, PartialBijection const& g) {
  if (f.degree() != g.degree()) {
    throw InputError("compose: degree mismatch " + std::to_string(f.degree()) + " vs "
                     + std::to_string(g.degree()));
  }
  std::vector<PartialBijection::value_type> im(g.degree(), 0);
  for (std::size_t i = 0; i < im.size(); ++i) {
    auto gi = g.image()[i];
    im[i]   = gi == 0 ? 0 : f.image()[gi - 1];
  }
  return PartialBijection(std::move(im));
}

PartialBijection star(PartialBijection const& f) {
  std::vector<PartialBijection::value_type> im(f.degree(), 0);
  for (std::size_t i = 0; i < im.size(); ++i) {
    if (auto a = f.image()[i]; a != 0) {
      im[a - 1] = static_cast<PartialBijection::value_type>(i + 1);
    }
  }
  return PartialBijection(std::move(im));
}

bool natural_leq(PartialBijection const& f, PartialBijection const& g) {
  if (f.degree() != g.degree()) {
    throw InputError("natural_leq: degree mismatch");
  }
  for (std::size_t i = 0; i < f.degree(); ++i) {
    if (f.image()[i] != 0 && f.image()[i] != g.image()[i]) {
      return false;
    }
  }
  return true;
}

bool is_idempotent(PartialBijection const& f) {
  for (std::size_t i = 0; i < f.degree(); ++i) {
    if (f.image()[i] != 0 && f.image()[i] != i + 1) {
      return false;
    }
  }
  return true;
}

std::ostream& operator<<(std::ostream& out, PartialBijection const& f) {
  return out << f.to_string();
}

}  // namespace twistcross
