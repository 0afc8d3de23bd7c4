#include "fuchsian/group.hpp"

#include <cmath>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace fuchsian {

namespace {

struct KeyHash {
    size_t operator()(const std::array<std::int64_t, 4>& k) const {
        size_t h = 1469598103934665603ull;
        for (auto v : k) {
            h ^= static_cast<size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace

std::array<std::int64_t, 4> projective_key(const Isometry& m, double scale) {
    Isometry n = m.normalized();
    std::array<double, 4> e{n.a, n.b, n.c, n.d};
    double sign = 1.0;
    for (double v : e) {
        if (std::abs(v) > 1e-9) {
            sign = v > 0 ? 1.0 : -1.0;
            break;
        }
    }
    std::array<std::int64_t, 4> k{};
    for (int i = 0; i < 4; ++i)
        k[i] = static_cast<std::int64_t>(std::llround(sign * e[i] / scale));
    return k;
}

void validate_alphabet(const GeneratorAlphabet& alphabet) {
    std::unordered_set<std::string> names;
    for (const auto& g : alphabet.generators) {
        if (g.name.empty() || !names.insert(g.name).second)
            throw DegenerateInput("generator names must be unique and non-empty");
        if (projectively_equal(g.mat, Isometry::identity(), 1e-9))
            throw DegenerateInput("generator '" + g.name + "' is the identity");
    }
}

std::string GroupElement::spelled(const GeneratorAlphabet& alphabet) const {
    if (word.empty()) return "e";
    std::string out;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) out += "·";
        out += alphabet.generators[word[i].gen].name;
        if (word[i].inverse) out += "⁻¹";
    }
    return out;
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
    GroupElement r;
    r.mat = g.mat * h.mat;
    r.word = g.word;
    for (const auto& f : h.word) {
        if (!r.word.empty() && r.word.back().gen == f.gen &&
            r.word.back().inverse != f.inverse)
            r.word.pop_back();
        else
            r.word.push_back(f);
    }
    return r;
}

GroupElement inverse(const GroupElement& g) {
    GroupElement r;
    r.mat = g.mat.inverse().normalized();
    r.word.reserve(g.word.size());
    for (auto it = g.word.rbegin(); it != g.word.rend(); ++it)
        r.word.push_back({it->gen, !it->inverse});
    return r;
}

GroupElement generator_element(const GeneratorAlphabet& alphabet, int gen, bool inv) {
    GroupElement r;
    r.mat = inv ? alphabet.generators[gen].mat.inverse().normalized()
                : alphabet.generators[gen].mat;
    r.word = {{gen, inv}};
    return r;
}

std::vector<GroupElement> group_ball(const GeneratorAlphabet& alphabet, int depth) {
    validate_alphabet(alphabet);
    std::vector<GroupElement> out{GroupElement::identity()};
    std::unordered_set<std::array<std::int64_t, 4>, KeyHash> seen;
    seen.insert(projective_key(Isometry::identity()));
    size_t frontier_begin = 0;
    for (int len = 1; len <= depth; ++len) {
        size_t frontier_end = out.size();
        for (size_t i = frontier_begin; i < frontier_end; ++i) {
            for (int g = 0; g < alphabet.size(); ++g) {
                for (bool inv : {false, true}) {
                    const auto& w = out[i].word;
                    if (!w.empty() && w.back().gen == g && w.back().inverse != inv)
                        continue; // adjacent formal inverses cancel
                    GroupElement next = compose(out[i], generator_element(alphabet, g, inv));
                    if (seen.insert(projective_key(next.mat)).second)
                        out.push_back(std::move(next));
                }
            }
        }
        frontier_begin = frontier_end;
    }
    return out;
}

Orbit orbit(const GeneratorAlphabet& alphabet, const Point& base, int depth) {
    if (depth < 1) throw DegenerateInput("orbit depth must be at least 1");
    auto elements = group_ball(alphabet, depth);
    Orbit orb{base, depth, {}};
    orb.entries.reserve(elements.size());
    double q = tolerances().vertex;
    std::unordered_map<std::int64_t, std::pair<std::array<std::int64_t, 4>, size_t>> images;
    auto image_key = [&](const Point& p) {
        auto ix = static_cast<std::int64_t>(std::llround(p.x / q));
        auto iy = static_cast<std::int64_t>(std::llround(p.y / q));
        return (ix << 32) ^ (iy & 0xffffffffll);
    };
    for (auto& el : elements) {
        Point img = el.mat.apply(base);
        auto mkey = projective_key(el.mat);
        auto [it, fresh] = images.try_emplace(image_key(img), mkey, orb.entries.size());
        if (!fresh) {
            if (it->second.first != mkey)
                throw FixedBasePoint("base point is fixed by a non-identity element");
            continue; // same element reached twice; keep the first witness
        }
        orb.entries.push_back({std::move(el), img});
    }
    return orb;
}

GeneratorAlphabet preset_modular() {
    GeneratorAlphabet a;
    a.name = "modular";
    a.generators = {{"S", Isometry::from_entries(0, -1, 1, 0)},
                    {"T", Isometry::from_entries(1, 1, 0, 1)}};
    a.suggested_center = disk_from_halfplane({0, 2});
    return a;
}

GeneratorAlphabet preset_gamma2() {
    GeneratorAlphabet a;
    a.name = "gamma2";
    a.generators = {{"A", Isometry::from_entries(1, 2, 0, 1)},
                    {"B", Isometry::from_entries(1, 0, 2, 1)}};
    Isometry A = a.generators[0].mat, B = a.generators[1].mat;
    Isometry comm = A * B * A.inverse() * B.inverse();
    a.metadata["commutator_abs_trace"] = std::abs(comm.trace());
    a.suggested_center = disk_from_halfplane({0, 2});
    return a;
}

GeneratorAlphabet preset_ideal_square() {
    // Hyperbolic translations along the two perpendicular diameters of the
    // disk, with translation length 2 asinh(1); their bisectors at the origin
    // are exactly the sides of the regular ideal quadrilateral with vertices
    // at odd multiples of pi/4.
    GeneratorAlphabet a;
    a.name = "ideal-square";
    double lambda = 1.0 + std::sqrt(2.0); // e^{asinh 1}
    Isometry A = Isometry::from_entries(lambda, 0, 0, 1.0 / lambda);
    double ch = std::sqrt(0.5); // cos(pi/4), sin(pi/4)
    Isometry K = Isometry::from_entries(ch, ch, -ch, ch); // rotation by pi/2 about i
    Isometry B = K * A * K.inverse();
    a.generators = {{"A", A}, {"B", B}};
    a.metadata["translation_half_length"] = std::log(lambda);
    a.suggested_center = Point{0, 0};
    return a;
}

std::optional<GeneratorAlphabet> preset_by_name(const std::string& name) {
    if (name == "modular") return preset_modular();
    if (name == "gamma2") return preset_gamma2();
    if (name == "ideal-square") return preset_ideal_square();
    return std::nullopt;
}

} // namespace fuchsian
