#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fuchsian/geometry.hpp"

namespace fuchsian {

struct Generator {
    std::string name;
    Isometry mat;
};

/// A generating set of a Fuchsian group with formal inverses, plus bookkeeping
/// carried by the presets. Downstream guarantees assume the generated group is
/// discrete with finite covolume; user-supplied alphabets are taken on faith.
struct GeneratorAlphabet {
    std::string name; // preset id or "custom"
    std::vector<Generator> generators;
    std::map<std::string, double> metadata;
    std::optional<Point> suggested_center;
    int size() const { return static_cast<int>(generators.size()); }
};

void validate_alphabet(const GeneratorAlphabet& alphabet);

struct WordFactor {
    int gen = 0;
    bool inverse = false;
    bool operator==(const WordFactor&) const = default;
};

/// Group element with a witness spelling (not canonical; identity has an
/// empty word). Matrix equality is always projective.
struct GroupElement {
    Isometry mat;
    std::vector<WordFactor> word;
    static GroupElement identity() { return {Isometry::identity(), {}}; }
    std::string spelled(const GeneratorAlphabet& alphabet) const;
};

GroupElement compose(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
GroupElement generator_element(const GeneratorAlphabet& alphabet, int gen, bool inv);

struct OrbitEntry {
    GroupElement element;
    Point image;
};

struct Orbit {
    Point base;
    int depth = 0;
    std::vector<OrbitEntry> entries; // identity first, then by word length
};

/// All distinct images of `base` under reduced words of length <= depth.
/// Throws FixedBasePoint if a non-identity element moves base by less than
/// the vertex tolerance.
Orbit orbit(const GeneratorAlphabet& alphabet, const Point& base, int depth);

/// All distinct group elements spelled by reduced words of length <= depth,
/// identity first, breadth-first.
std::vector<GroupElement> group_ball(const GeneratorAlphabet& alphabet, int depth);

/// Dedup key: quantized entries after det- and sign-normalization.
std::array<std::int64_t, 4> projective_key(const Isometry& m, double scale = 1e-7);

GeneratorAlphabet preset_modular();
GeneratorAlphabet preset_gamma2();
GeneratorAlphabet preset_ideal_square();
std::optional<GeneratorAlphabet> preset_by_name(const std::string& name);

} // namespace fuchsian
