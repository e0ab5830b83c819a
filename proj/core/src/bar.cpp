#include "crossmod/bar.hpp"

#include <limits>
#include <string>
#include <utility>

namespace crossmod {

namespace {

std::size_t checked_level_order(std::size_t base, std::size_t radix,
                                std::size_t count) {
  std::size_t total = base;
  for (std::size_t i = 0; i < count; ++i) {
    if (radix != 0 && total > std::numeric_limits<Elem>::max() / radix)
      throw Error(Errc::ClosureTooLarge,
                  "bar level order exceeds the element index range");
    total *= radix;
  }
  return total;
}

std::vector<Elem> unpack_uniform(Elem x, std::size_t radix, std::size_t width) {
  std::vector<Elem> digits(width);
  for (std::size_t i = width; i-- > 0;) {
    digits[i] = static_cast<Elem>(x % radix);
    x = static_cast<Elem>(x / radix);
  }
  return digits;
}

Elem pack_uniform(std::span<const Elem> digits, std::size_t radix) {
  std::size_t idx = 0;
  for (Elem d : digits) idx = idx * radix + d;
  return static_cast<Elem>(idx);
}

class BarNNImpl final : public GroupImpl {
 public:
  BarNNImpl(Group n, std::size_t k) : n_(std::move(n)), width_(k + 1) {
    order_ = checked_level_order(1, n_.order(), width_);
    std::vector<Elem> digits(width_, static_cast<Elem>(n_.identity()));
    id_ = pack_uniform(digits, n_.order());
    for (std::size_t i = 0; i < width_; ++i)
      for (Elem s : n_.generators()) {
        digits.assign(width_, static_cast<Elem>(n_.identity()));
        digits[i] = s;
        gens_.push_back(pack_uniform(digits, n_.order()));
      }
    label_ = "Bar(" + n_.label() + "," + n_.label() + ")_" + std::to_string(k);
  }

  std::size_t order() const override { return order_; }
  Elem identity() const override { return id_; }

  Elem mul(Elem x, Elem y) const override {
    std::vector<Elem> a = unpack_uniform(x, n_.order(), width_);
    std::vector<Elem> b = unpack_uniform(y, n_.order(), width_);
    std::vector<Elem> r(width_);
    Elem prefix = n_.identity();
    r[0] = n_.mul(a[0], b[0]);
    for (std::size_t i = 1; i < width_; ++i) {
      prefix = n_.mul(prefix, b[i - 1]);
      r[i] = n_.mul(n_.conj(a[i], prefix), b[i]);
    }
    return pack_uniform(r, n_.order());
  }

  Elem inv(Elem x) const override {
    std::vector<Elem> a = unpack_uniform(x, n_.order(), width_);
    std::vector<Elem> b(width_);
    Elem prefix = n_.identity();
    for (std::size_t i = 0; i < width_; ++i) {
      if (i > 0) prefix = n_.mul(prefix, b[i - 1]);
      b[i] = n_.inv(n_.conj(a[i], prefix));
    }
    return pack_uniform(b, n_.order());
  }

 private:
  Group n_;
  std::size_t width_;
  std::size_t order_;
  Elem id_;
};

class BarGNImpl final : public GroupImpl {
 public:
  BarGNImpl(const NormalMap& nm, std::size_t k)
      : n_(nm.source), g_(nm.target), map_(nm.map), act_(nm.action), width_(k) {
    order_ = checked_level_order(g_.order(), n_.order(), width_);
    id_ = pack(static_cast<Elem>(g_.identity()),
               std::vector<Elem>(width_, static_cast<Elem>(n_.identity())));
    const std::vector<Elem> unit(width_, static_cast<Elem>(n_.identity()));
    for (Elem s : g_.generators()) gens_.push_back(pack(s, unit));
    std::vector<Elem> digits = unit;
    for (std::size_t i = 0; i < width_; ++i)
      for (Elem s : n_.generators()) {
        digits.assign(width_, static_cast<Elem>(n_.identity()));
        digits[i] = s;
        gens_.push_back(pack(static_cast<Elem>(g_.identity()), digits));
      }
    label_ = "Bar(" + g_.label() + "," + n_.label() + ")_" + std::to_string(k);
  }

  std::size_t order() const override { return order_; }
  Elem identity() const override { return id_; }

  Elem mul(Elem x, Elem y) const override {
    Elem g = base(x), h = base(y);
    std::vector<Elem> a = coords(x), b = coords(y);
    std::vector<Elem> r(width_);
    Elem prefix = n_.identity();
    for (std::size_t j = 0; j < width_; ++j) {
      Elem e = g_.mul(h, map_(prefix));
      r[j] = n_.mul(act_.act(a[j], e), b[j]);
      prefix = n_.mul(prefix, b[j]);
    }
    return pack(g_.mul(g, h), r);
  }

  Elem inv(Elem x) const override {
    Elem h = g_.inv(base(x));
    std::vector<Elem> a = coords(x);
    std::vector<Elem> b(width_);
    Elem prefix = n_.identity();
    for (std::size_t j = 0; j < width_; ++j) {
      if (j > 0) prefix = n_.mul(prefix, b[j - 1]);
      Elem e = g_.mul(h, map_(prefix));
      b[j] = n_.inv(act_.act(a[j], e));
    }
    return pack(h, b);
  }

  Elem base(Elem x) const {
    return static_cast<Elem>(x / tail_span());
  }
  std::vector<Elem> coords(Elem x) const {
    return unpack_uniform(static_cast<Elem>(x % tail_span()), n_.order(), width_);
  }
  Elem pack(Elem g, std::span<const Elem> digits) const {
    return static_cast<Elem>(g * tail_span() + pack_uniform(digits, n_.order()));
  }

 private:
  std::size_t tail_span() const { return order_ / g_.order(); }

  Group n_;
  Group g_;
  Hom map_;
  Action act_;
  std::size_t width_;
  std::size_t order_;
  Elem id_;
};

// Coordinate transforms shared by faces and degeneracies. merge_at folds
// coordinates i and i+1 into one; insert_at puts the identity after
// position i.
std::vector<Elem> merge_at(const Group& n, const std::vector<Elem>& t,
                           std::size_t i) {
  std::vector<Elem> out;
  out.reserve(t.size() - 1);
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (j == i) {
      out.push_back(n.mul(t[j], t[j + 1]));
      ++j;
    } else {
      out.push_back(t[j]);
    }
  }
  return out;
}

std::vector<Elem> insert_at(const Group& n, const std::vector<Elem>& t,
                            std::size_t i) {
  std::vector<Elem> out;
  out.reserve(t.size() + 1);
  for (std::size_t j = 0; j < t.size(); ++j) {
    out.push_back(t[j]);
    if (j == i) out.push_back(static_cast<Elem>(n.identity()));
  }
  return out;
}

}  // namespace

Group bar_nn_level(const Group& n, std::size_t k) {
  return Group(std::make_shared<BarNNImpl>(n, k));
}

std::vector<Elem> bar_nn_coords(const Group& n, std::size_t k, Elem x) {
  return unpack_uniform(x, n.order(), k + 1);
}

Elem bar_nn_pack(const Group& n, std::span<const Elem> coords) {
  return pack_uniform(coords, n.order());
}

SimplicialGroup bar_nn(const Group& n, std::size_t depth) {
  SimplicialGroup sg;
  sg.depth = depth;
  sg.level.reserve(depth + 1);
  for (std::size_t k = 0; k <= depth; ++k) sg.level.push_back(bar_nn_level(n, k));
  sg.face.resize(depth + 1);
  sg.degen.resize(depth + 1);

  for (std::size_t k = 1; k <= depth; ++k)
    for (std::size_t i = 0; i <= k; ++i) {
      std::vector<Elem> img(sg.level[k].order());
      for (Elem x = 0; x < img.size(); ++x) {
        std::vector<Elem> t = bar_nn_coords(n, k, x);
        if (i < k) t = merge_at(n, t, i);
        else t.pop_back();
        img[x] = bar_nn_pack(n, t);
      }
      sg.face[k].push_back(hom_unchecked(sg.level[k], sg.level[k - 1], std::move(img)));
    }

  for (std::size_t k = 0; k < depth; ++k)
    for (std::size_t i = 0; i <= k; ++i) {
      std::vector<Elem> img(sg.level[k].order());
      for (Elem x = 0; x < img.size(); ++x)
        img[x] = bar_nn_pack(n, insert_at(n, bar_nn_coords(n, k, x), i));
      sg.degen[k].push_back(hom_unchecked(sg.level[k], sg.level[k + 1], std::move(img)));
    }

  return sg;
}

Group bar_gn_level(const NormalMap& nm, std::size_t k) {
  return Group(std::make_shared<BarGNImpl>(nm, k));
}

namespace {

std::size_t tail_span_of(const NormalMap& nm, std::size_t k) {
  std::size_t span = 1;
  for (std::size_t i = 0; i < k; ++i) span *= nm.source.order();
  return span;
}

}  // namespace

Elem bar_gn_base(const NormalMap& nm, std::size_t k, Elem x) {
  return static_cast<Elem>(x / tail_span_of(nm, k));
}

std::vector<Elem> bar_gn_coords(const NormalMap& nm, std::size_t k, Elem x) {
  return unpack_uniform(static_cast<Elem>(x % tail_span_of(nm, k)),
                        nm.source.order(), k);
}

Elem bar_gn_pack(const NormalMap& nm, Elem g, std::span<const Elem> coords) {
  return static_cast<Elem>(g * tail_span_of(nm, coords.size()) +
                           pack_uniform(coords, nm.source.order()));
}

SimplicialGroup bar_gn(const NormalMap& nm, std::size_t depth) {
  const Group& n = nm.source;
  const Group& g = nm.target;

  SimplicialGroup sg;
  sg.depth = depth;
  sg.level.reserve(depth + 1);
  for (std::size_t k = 0; k <= depth; ++k) sg.level.push_back(bar_gn_level(nm, k));
  sg.face.resize(depth + 1);
  sg.degen.resize(depth + 1);

  for (std::size_t k = 1; k <= depth; ++k)
    for (std::size_t i = 0; i <= k; ++i) {
      std::vector<Elem> img(sg.level[k].order());
      for (Elem x = 0; x < img.size(); ++x) {
        Elem b = bar_gn_base(nm, k, x);
        std::vector<Elem> t = bar_gn_coords(nm, k, x);
        if (i == 0) {
          b = g.mul(b, nm.map(t[0]));
          t.erase(t.begin());
        } else if (i < k) {
          t = merge_at(n, t, i - 1);
        } else {
          t.pop_back();
        }
        img[x] = bar_gn_pack(nm, b, t);
      }
      sg.face[k].push_back(hom_unchecked(sg.level[k], sg.level[k - 1], std::move(img)));
    }

  for (std::size_t k = 0; k < depth; ++k)
    for (std::size_t i = 0; i <= k; ++i) {
      std::vector<Elem> img(sg.level[k].order());
      for (Elem x = 0; x < img.size(); ++x) {
        Elem b = bar_gn_base(nm, k, x);
        std::vector<Elem> t = bar_gn_coords(nm, k, x);
        if (i == 0) t.insert(t.begin(), static_cast<Elem>(n.identity()));
        else t = insert_at(n, t, i - 1);
        img[x] = bar_gn_pack(nm, b, t);
      }
      sg.degen[k].push_back(hom_unchecked(sg.level[k], sg.level[k + 1], std::move(img)));
    }

  return sg;
}

}  // namespace crossmod
