#include "markovcat/projective.hpp"

#include <algorithm>

namespace markovcat::projective {

bool label_less(const Label& a, const Label& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

LabelSet canonical_labels(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end(), label_less);
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

std::string show_labels(const std::vector<Label>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i];
  }
  out += "}";
  return out;
}

IndexSet IndexSet::naturals(std::string prefix) {
  auto label_at = [prefix](std::size_t i) { return prefix + std::to_string(i); };
  auto contains = [prefix](const Label& l) {
    if (l.size() <= prefix.size() || l.compare(0, prefix.size(), prefix) != 0) return false;
    const std::string digits = l.substr(prefix.size());
    if (digits.size() > 1 && digits[0] == '0') return false;
    return std::all_of(digits.begin(), digits.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  auto position_of = [prefix, contains](const Label& l) -> std::size_t {
    if (!contains(l)) throw std::invalid_argument("label not in index set: " + l);
    return static_cast<std::size_t>(std::stoull(l.substr(prefix.size())));
  };
  return IndexSet{prefix + "0,1,2,...", std::move(label_at), std::move(contains),
                  std::move(position_of)};
}

IndexSet IndexSet::finite(std::vector<Label> labels) {
  auto label_at = [labels](std::size_t i) {
    if (i >= labels.size()) {
      throw std::out_of_range("finite index set has only " + std::to_string(labels.size()) +
                              " labels");
    }
    return labels[i];
  };
  auto contains = [labels](const Label& l) {
    return std::find(labels.begin(), labels.end(), l) != labels.end();
  };
  auto position_of = [labels](const Label& l) -> std::size_t {
    const auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw std::invalid_argument("label not in index set: " + l);
    return static_cast<std::size_t>(it - labels.begin());
  };
  return IndexSet{"finite(" + std::to_string(labels.size()) + ")", std::move(label_at),
                  std::move(contains), std::move(position_of)};
}

IndexSet IndexSet::disjoint_union(IndexSet a, IndexSet b) {
  auto label_at = [a, b](std::size_t i) {
    return i % 2 == 0 ? a.label_at(i / 2) : b.label_at(i / 2);
  };
  auto contains = [a, b](const Label& l) { return a.contains(l) || b.contains(l); };
  auto position_of = [a, b](const Label& l) -> std::size_t {
    if (a.contains(l)) return 2 * a.position_of(l);
    return 2 * b.position_of(l) + 1;
  };
  return IndexSet{a.name + " + " + b.name, std::move(label_at), std::move(contains),
                  std::move(position_of)};
}

std::vector<Label> IndexSet::window(std::size_t n) const {
  std::vector<Label> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(label_at(i));
  return out;
}

IndexInjection IndexInjection::identity() {
  return IndexInjection{"id", [](std::size_t n) { return n; },
                        [](std::size_t n) { return std::optional<std::size_t>(n); }, true};
}

IndexInjection IndexInjection::transposition(std::size_t i, std::size_t j) {
  auto map = [i, j](std::size_t n) { return n == i ? j : (n == j ? i : n); };
  return IndexInjection{"swap(" + std::to_string(i) + "," + std::to_string(j) + ")", map,
                        [map](std::size_t n) { return std::optional<std::size_t>(map(n)); },
                        true};
}

IndexInjection IndexInjection::permutation(std::vector<std::size_t> image) {
  {
    std::vector<std::size_t> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      if (sorted[k] != k) {
        throw std::invalid_argument("finite permutation image must be a rearrangement of 0..n-1");
      }
    }
  }
  std::vector<std::size_t> inverse(image.size());
  for (std::size_t k = 0; k < image.size(); ++k) inverse[image[k]] = k;
  auto map = [image](std::size_t n) { return n < image.size() ? image[n] : n; };
  auto preimage = [inverse](std::size_t n) {
    return std::optional<std::size_t>(n < inverse.size() ? inverse[n] : n);
  };
  return IndexInjection{"perm(" + std::to_string(image.size()) + ")", std::move(map),
                        std::move(preimage), true};
}

IndexInjection IndexInjection::stride(std::size_t stride, std::size_t offset) {
  if (stride == 0) throw std::invalid_argument("stride must be >= 1");
  auto map = [stride, offset](std::size_t n) { return stride * n + offset; };
  auto preimage = [stride, offset](std::size_t n) -> std::optional<std::size_t> {
    if (n < offset || (n - offset) % stride != 0) return std::nullopt;
    return (n - offset) / stride;
  };
  return IndexInjection{
      std::to_string(stride) + "n+" + std::to_string(offset), std::move(map),
      std::move(preimage), stride == 1 && offset == 0};
}

IndexInjection IndexInjection::shift(std::size_t k) {
  auto map = [k](std::size_t n) { return n + k; };
  auto preimage = [k](std::size_t n) -> std::optional<std::size_t> {
    if (n < k) return std::nullopt;
    return n - k;
  };
  return IndexInjection{"n+" + std::to_string(k), std::move(map), std::move(preimage),
                        k == 0};
}

IndexInjection IndexInjection::composite(const IndexInjection& a, const IndexInjection& b) {
  auto map = [a, b](std::size_t n) { return a.map(b.map(n)); };
  auto preimage = [a, b](std::size_t n) -> std::optional<std::size_t> {
    const auto mid = a.preimage(n);
    if (!mid) return std::nullopt;
    return b.preimage(*mid);
  };
  return IndexInjection{a.name + "." + b.name, std::move(map), std::move(preimage),
                        a.finite_permutation && b.finite_permutation};
}

}  // namespace markovcat::projective
