#include "stml/chart.hpp"

#include <set>
#include <stdexcept>

namespace stml {

ChartSpec make_chart(std::vector<std::string> names) {
  if (names.empty()) throw std::invalid_argument("chart needs at least one coordinate");
  std::set<std::string> uniq(names.begin(), names.end());
  if (uniq.size() != names.size())
    throw std::invalid_argument("chart coordinate names must be distinct");
  return ChartSpec{std::move(names), std::nullopt};
}

TangentChart make_tangent_chart(const ChartSpec& base, int r) {
  if (r < 0) throw std::invalid_argument("tangent chart order must be non-negative");
  const int n = base.dim();
  ChartSpec lifted;
  lifted.names.reserve(static_cast<std::size_t>(n) * (r + 1));
  for (int lambda = 0; lambda <= r; ++lambda)
    for (int i = 0; i < n; ++i)
      lifted.names.push_back(lambda == 0 ? base.names[static_cast<std::size_t>(i)]
                                         : base.names[static_cast<std::size_t>(i)] + "_" +
                                               std::to_string(lambda));
  if (base.domain) {
    // the domain constraint acts on the base block only
    ScalarField dom = *base.domain;
    lifted.domain = make_field(n * (r + 1), [dom, n]<class T>(std::span<const T> a) -> T {
      return dom(a.subspan(0, static_cast<std::size_t>(n)));
    });
  }
  return TangentChart{base, r, std::move(lifted)};
}

}  // namespace stml
