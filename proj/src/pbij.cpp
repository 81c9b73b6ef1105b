#include "invsg/pbij.hpp"

#include <algorithm>
#include <charconv>

#include "invsg/errors.hpp"

namespace invsg {

namespace {

void check_degree(PartialBijection const& f, PartialBijection const& g) {
  if (f.degree() != g.degree()) {
    fail(ErrorCode::DegreeMismatch,
         "degrees " + std::to_string(f.degree()) + " and "
             + std::to_string(g.degree()));
  }
}

Point parse_point(std::string_view token, std::size_t degree) {
  while (!token.empty() && token.front() == ' ') {
    token.remove_prefix(1);
  }
  while (!token.empty() && token.back() == ' ') {
    token.remove_suffix(1);
  }
  Point value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    fail(ErrorCode::ParseError, "bad point '" + std::string(token) + "'");
  }
  if (value == 0 || value > degree) {
    fail(ErrorCode::PointOutOfRange,
         std::to_string(value) + " not in 1.." + std::to_string(degree));
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t                   start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) {
      break;
    }
    start = pos + 1;
  }
  return out;
}

}  // namespace

PartialBijection::PartialBijection(std::size_t degree) : image_(degree, 0) {
  if (degree == 0) {
    fail(ErrorCode::NotAPartialBijection, "degree must be positive");
  }
}

PartialBijection::PartialBijection(std::size_t degree, std::vector<Pair> const& graph)
    : PartialBijection(degree) {
  std::vector<bool> hit(degree + 1, false);
  for (auto [x, y] : graph) {
    if (x == 0 || y == 0 || x > degree || y > degree) {
      fail(ErrorCode::PointOutOfRange,
           std::to_string(x) + ">" + std::to_string(y) + " outside 1.."
               + std::to_string(degree));
    }
    if (image_[x - 1] != 0) {
      fail(ErrorCode::NotAPartialBijection,
           "point " + std::to_string(x) + " mapped twice");
    }
    if (hit[y]) {
      fail(ErrorCode::NotAPartialBijection,
           "point " + std::to_string(y) + " hit twice");
    }
    image_[x - 1] = y;
    hit[y]        = true;
  }
}

PartialBijection PartialBijection::identity(std::size_t degree) {
  PartialBijection f(degree);
  for (Point x = 1; x <= degree; ++x) {
    f.image_[x - 1] = x;
  }
  return f;
}

PartialBijection PartialBijection::parse(std::string_view text, std::size_t degree) {
  while (!text.empty() && text.front() == ' ') {
    text.remove_prefix(1);
  }
  while (!text.empty() && text.back() == ' ') {
    text.remove_suffix(1);
  }
  if (text == "0") {
    return PartialBijection(degree);
  }
  if (text.starts_with("id:")) {
    text.remove_prefix(3);
    std::vector<Point> points;
    if (!text.empty()) {
      for (auto token : split(text, ',')) {
        points.push_back(parse_point(token, degree));
      }
    }
    return partial_identity(degree, points);
  }
  if (text.empty()) {
    fail(ErrorCode::ParseError, "empty partial bijection text");
  }
  std::vector<Pair> graph;
  for (auto token : split(text, ',')) {
    auto arrow = token.find('>');
    if (arrow == std::string_view::npos) {
      fail(ErrorCode::ParseError, "expected x>y, got '" + std::string(token) + "'");
    }
    graph.emplace_back(parse_point(token.substr(0, arrow), degree),
                       parse_point(token.substr(arrow + 1), degree));
  }
  return PartialBijection(degree, graph);
}

std::optional<Point> PartialBijection::operator()(Point x) const {
  if (x == 0 || x > degree() || image_[x - 1] == 0) {
    return std::nullopt;
  }
  return image_[x - 1];
}

std::vector<PartialBijection::Pair> PartialBijection::graph() const {
  std::vector<Pair> out;
  for (Point x = 1; x <= degree(); ++x) {
    if (image_[x - 1] != 0) {
      out.emplace_back(x, image_[x - 1]);
    }
  }
  return out;
}

std::vector<Point> PartialBijection::domain() const {
  std::vector<Point> out;
  for (Point x = 1; x <= degree(); ++x) {
    if (image_[x - 1] != 0) {
      out.push_back(x);
    }
  }
  return out;
}

std::vector<Point> PartialBijection::range() const {
  std::vector<Point> out;
  for (auto y : image_) {
    if (y != 0) {
      out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> PartialBijection::fixed_points() const {
  std::vector<Point> out;
  for (Point x = 1; x <= degree(); ++x) {
    if (image_[x - 1] == x) {
      out.push_back(x);
    }
  }
  return out;
}

std::size_t PartialBijection::rank() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(image_.begin(), image_.end(), [](Point y) { return y != 0; }));
}

bool PartialBijection::is_partial_identity() const noexcept {
  for (Point x = 1; x <= degree(); ++x) {
    if (image_[x - 1] != 0 && image_[x - 1] != x) {
      return false;
    }
  }
  return true;
}

std::string PartialBijection::to_string() const {
  if (is_empty()) {
    return "0";
  }
  std::string out;
  if (is_partial_identity()) {
    out = "id:";
    for (auto x : domain()) {
      if (out.size() > 3) {
        out += ',';
      }
      out += std::to_string(x);
    }
    return out;
  }
  for (auto [x, y] : graph()) {
    if (!out.empty()) {
      out += ',';
    }
    out += std::to_string(x) + ">" + std::to_string(y);
  }
  return out;
}

std::strong_ordering PartialBijection::operator<=>(PartialBijection const& other) const {
  if (auto c = degree() <=> other.degree(); c != 0) {
    return c;
  }
  auto lhs = graph();
  auto rhs = other.graph();
  return std::lexicographical_compare_three_way(
      lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

std::size_t PartialBijection::hash() const noexcept {
  std::size_t seed = image_.size();
  for (auto y : image_) {
    seed ^= y + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}

PartialBijection partial_identity(std::size_t degree, std::vector<Point> const& points) {
  std::vector<PartialBijection::Pair> graph;
  for (auto x : points) {
    graph.emplace_back(x, x);
  }
  return PartialBijection(degree, graph);
}

PartialBijection compose(PartialBijection const& f, PartialBijection const& g) {
  check_degree(f, g);
  std::vector<PartialBijection::Pair> graph;
  for (auto [x, y] : g.graph()) {
    if (auto z = f(y)) {
      graph.emplace_back(x, *z);
    }
  }
  return PartialBijection(f.degree(), graph);
}

PartialBijection invert(PartialBijection const& f) {
  std::vector<PartialBijection::Pair> graph;
  for (auto [x, y] : f.graph()) {
    graph.emplace_back(y, x);
  }
  return PartialBijection(f.degree(), graph);
}

bool restriction_leq(PartialBijection const& f, PartialBijection const& g) {
  check_degree(f, g);
  for (auto [x, y] : f.graph()) {
    if (g(x) != y) {
      return false;
    }
  }
  return true;
}

std::optional<PartialBijection> compatible_union(PartialBijection const& f,
                                                 PartialBijection const& g) {
  check_degree(f, g);
  auto graph = f.graph();
  for (auto p : g.graph()) {
    if (std::find(graph.begin(), graph.end(), p) == graph.end()) {
      graph.push_back(p);
    }
  }
  try {
    return PartialBijection(f.degree(), graph);
  } catch (Error const& e) {
    if (e.code() == ErrorCode::NotAPartialBijection) {
      return std::nullopt;
    }
    throw;
  }
}

std::vector<PartialBijection> enumerate_symmetric_inverse_monoid(std::size_t n,
                                                                 std::size_t bound) {
  if (n == 0) {
    fail(ErrorCode::NotAPartialBijection, "degree must be positive");
  }
  if (n > bound) {
    fail(ErrorCode::BoundExceeded,
         "I_" + std::to_string(n) + " exceeds degree bound " + std::to_string(bound));
  }
  std::vector<PartialBijection>       out;
  std::vector<PartialBijection::Pair> graph;
  std::vector<bool>                   used(n + 1, false);
  // Decide the image of each source point in turn: undefined or an unused target.
  auto extend = [&](auto&& self, Point x) -> void {
    if (x > n) {
      out.emplace_back(n, graph);
      return;
    }
    self(self, x + 1);
    for (Point y = 1; y <= n; ++y) {
      if (!used[y]) {
        used[y] = true;
        graph.emplace_back(x, y);
        self(self, x + 1);
        graph.pop_back();
        used[y] = false;
      }
    }
  };
  extend(extend, 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace invsg
