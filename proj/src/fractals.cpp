#include <lipcap/fractals.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>

namespace lipcap {

namespace {

constexpr size_t kPointBudget = 200000;

int64_t pow_ll(int64_t base, int exp) {
    int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

std::vector<double> cantor_abscissas(int k, int depth) {
    if (k < 2 || k > 9) throw InvalidInput("piece count must lie in [2, 9]");
    if (depth < 1) throw InvalidInput("depth must be at least 1");
    size_t count = 2 * static_cast<size_t>(pow_ll(k, std::min(depth, 18)));
    if (depth > 18 || count > kPointBudget) throw InvalidInput("depth exceeds the point budget");

    std::vector<int64_t> lefts{0};
    int64_t denom = k - 1;
    for (int level = 0; level < depth; ++level) {
        std::vector<int64_t> next;
        next.reserve(lefts.size() * static_cast<size_t>(k));
        for (int64_t a : lefts) {
            for (int i = 0; i < k; ++i) {
                next.push_back(a * (k + 1) + static_cast<int64_t>(i) * k);
            }
        }
        lefts = std::move(next);
        denom *= k + 1;
    }
    std::vector<double> xs;
    xs.reserve(lefts.size() * 2);
    for (int64_t a : lefts) {
        xs.push_back(static_cast<double>(a) / static_cast<double>(denom));
        xs.push_back(static_cast<double>(a + (k - 1)) / static_cast<double>(denom));
    }
    return xs;
}

DiscreteSet middle_thirds_net(int depth, double resolution) {
    std::vector<Point> pts;
    for (double a : cantor_abscissas(2, depth)) {
        pts.push_back(Point{a, 0.0});
    }
    return DiscreteSet(2, resolution, std::move(pts));
}

CantorStack example_cantor_stack(int d, int kmax, int depth) {
    if (d < 2) throw InvalidInput("dimension must be at least 2");
    if (kmax < 2 || kmax > 9) throw InvalidInput("piece count must lie in [2, 9]");
    if (depth < 1) throw InvalidInput("depth must be at least 1");
    size_t total = 1;
    for (int k = 2; k <= kmax; ++k) {
        if (depth > 18) throw InvalidInput("depth exceeds the point budget");
        total += 2 * static_cast<size_t>(pow_ll(k, depth));
        if (total > kPointBudget) throw InvalidInput("depth exceeds the point budget");
    }

    std::vector<Point> pts{zero_point(d)};
    double min_gap = 1.0;
    for (int k = 2; k <= kmax; ++k) {
        std::vector<int64_t> lefts{0};
        int64_t denom = k - 1;
        for (int level = 0; level < depth; ++level) {
            std::vector<int64_t> next;
            next.reserve(lefts.size() * static_cast<size_t>(k));
            for (int64_t a : lefts) {
                for (int i = 0; i < k; ++i) {
                    next.push_back(a * (k + 1) + static_cast<int64_t>(i) * k);
                }
            }
            lefts = std::move(next);
            denom *= k + 1;
        }
        double scaled_denom = static_cast<double>(denom) * k * k;
        double height = 1.0 / k;
        for (int64_t a : lefts) {
            for (int64_t off : {int64_t{0}, int64_t{k - 1}}) {
                Point p = zero_point(d);
                p[d - 2] = height;
                p[d - 1] = static_cast<double>(a + off) / scaled_denom;
                pts.push_back(std::move(p));
            }
        }
        min_gap = std::min(min_gap, 1.0 / scaled_denom);
    }
    if (kmax >= 3) {
        min_gap = std::min(min_gap, 1.0 / (static_cast<double>(kmax - 1) * kmax));
    }

    CantorStack stack{DiscreteSet(d, std::min(1e-9, min_gap / 4.0), std::move(pts)), {}, {}};
    for (int k = 2; k <= kmax; ++k) {
        stack.dims.push_back(std::log(static_cast<double>(k)) /
                             std::log(static_cast<double>(k + 1)));
    }
    double cover = 1.0 / (2 * 2);
    stack.covering_c2.push_back(cover);
    for (int level = 0; level < depth; ++level) {
        cover = cover * (2.0 / 3.0);
        stack.covering_c2.push_back(cover);
    }
    return stack;
}

namespace {

// 0, 1, 1/2, 1/3, 2/3, 1/4, 3/4, ... ; with_ends controls the leading 0, 1
std::vector<double> stern_free_fractions(int count, bool with_ends) {
    std::vector<double> out;
    if (with_ends) {
        out.push_back(0.0);
        if (out.size() < static_cast<size_t>(count)) out.push_back(1.0);
    }
    for (int q = 2; out.size() < static_cast<size_t>(count); ++q) {
        for (int p = 1; p < q && out.size() < static_cast<size_t>(count); ++p) {
            if (std::gcd(p, q) == 1) {
                out.push_back(static_cast<double>(p) / static_cast<double>(q));
            }
        }
    }
    return out;
}

struct ToothNode {
    CombTooth tooth;
    std::vector<size_t> children;
    double along = 0.0;  // foot position along the parent, for walk ordering
};

}  // namespace

CombExample example_comb(int stages, int teeth) {
    if (stages < 1) throw InvalidInput("need at least one stage");
    if (teeth < 1) throw InvalidInput("need at least one tooth per component");
    size_t total = 0;
    size_t layer = 1;
    for (int n = 1; n <= stages; ++n) {
        layer *= static_cast<size_t>(teeth);
        total += layer;
        if (total > kPointBudget) throw InvalidInput("comb exceeds the point budget");
    }

    std::vector<ToothNode> nodes;
    std::vector<size_t> base_children;
    std::vector<size_t> prev_layer;  // indices of the previous stage's teeth

    for (int n = 1; n <= stages; ++n) {
        std::vector<double> fracs = stern_free_fractions(teeth, n == 1);
        Point dir = zero_point(2);
        dir[(n % 2 == 1) ? 1 : 0] = 1.0;
        std::vector<size_t> cur_layer;
        size_t parents = (n == 1) ? 1 : prev_layer.size();
        for (size_t pi = 0; pi < parents; ++pi) {
            Point pa{0.0, 0.0}, pb{1.0, 0.0};
            if (n > 1) {
                pa = nodes[prev_layer[pi]].tooth.foot;
                pb = nodes[prev_layer[pi]].tooth.tip;
            }
            for (int j = 0; j < teeth; ++j) {
                double t = fracs[static_cast<size_t>(j)];
                double len = 1.0 / static_cast<double>((j + 1) * (j + 1) * (n + 1) * (n + 1));
                ToothNode node;
                node.along = t;
                node.tooth.stage = n;
                node.tooth.length = len;
                node.tooth.foot = Point{pa[0] + t * (pb[0] - pa[0]), pa[1] + t * (pb[1] - pa[1])};
                node.tooth.tip = Point{node.tooth.foot[0] + len * dir[0],
                                       node.tooth.foot[1] + len * dir[1]};
                size_t id = nodes.size();
                nodes.push_back(std::move(node));
                cur_layer.push_back(id);
                if (n == 1) {
                    base_children.push_back(id);
                } else {
                    nodes[prev_layer[pi]].children.push_back(id);
                }
            }
        }
        prev_layer = std::move(cur_layer);
    }

    auto by_along = [&nodes](size_t a, size_t b) { return nodes[a].along < nodes[b].along; };
    std::sort(base_children.begin(), base_children.end(), by_along);
    for (ToothNode& node : nodes) {
        std::sort(node.children.begin(), node.children.end(), by_along);
    }

    std::vector<Point> walk;
    auto emit = [&walk](const Point& p) {
        if (walk.empty() || !(walk.back() == p)) walk.push_back(p);
    };
    auto climb = [&](auto&& self, size_t id) -> void {
        const ToothNode& node = nodes[id];
        emit(node.tooth.foot);
        for (size_t child : node.children) {
            emit(nodes[child].tooth.foot);
            self(self, child);
        }
        emit(node.tooth.tip);
        emit(node.tooth.foot);
    };
    emit(Point{0.0, 0.0});
    for (size_t child : base_children) {
        emit(nodes[child].tooth.foot);
        climb(climb, child);
    }
    emit(Point{1.0, 0.0});

    CombExample out{PolylineCurve(2, std::move(walk)), {}};
    out.info.strokes.push_back(1.0);
    for (const ToothNode& node : nodes) {
        out.info.strokes.push_back(node.tooth.length);
        out.info.teeth.push_back(node.tooth);
    }
    double folded = 0.0;
    for (double s : out.info.strokes) folded += s;
    out.info.set_length = folded;
    out.info.traversal_length = out.curve.total_length();
    return out;
}

}  // namespace lipcap
