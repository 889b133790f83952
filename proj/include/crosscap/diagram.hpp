#ifndef CROSSCAP_DIAGRAM_HPP
#define CROSSCAP_DIAGRAM_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace crosscap {

// Resolution of a single crossing.  With slots numbered counterclockwise
// from the incoming understrand, A joins slots {0,1},{2,3} and B joins
// {0,3},{1,2}.
enum class Smoothing : std::uint8_t { A = 0, B = 1 };

inline Smoothing opposite(Smoothing s) noexcept { return s == Smoothing::A ? Smoothing::B : Smoothing::A; }
inline char to_char(Smoothing s) noexcept { return s == Smoothing::A ? 'A' : 'B'; }

enum class KinkSign : std::int8_t { Negative = -1, Positive = 1 };

// Four arc labels counterclockwise, starting at the incoming understrand.
// Slots 0,2 carry the understrand and slots 1,3 the overstrand.
struct Crossing {
    std::array<int, 4> slots{};

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

// A dart is one slot of one crossing, encoded as 4 * crossing + slot.
using Dart = int;

constexpr int dart_crossing(Dart d) noexcept { return d >> 2; }
constexpr int dart_slot(Dart d) noexcept { return d & 3; }
constexpr Dart make_dart(int crossing, int slot) noexcept { return 4 * crossing + (slot & 3); }

// The corner of a crossing lying between `slot` and `slot + 1`.
struct Corner {
    int crossing = 0;
    int slot = 0;

    // The smoothing that keeps this corner as part of a single state circle.
    Smoothing hugging_smoothing() const noexcept { return (slot & 1) == 0 ? Smoothing::A : Smoothing::B; }

    friend bool operator==(const Corner&, const Corner&) = default;
};

struct Face {
    std::vector<Corner> corners;  // in traversal order
    std::vector<int> edges;       // arc labels along the boundary, same order

    std::size_t size() const noexcept { return corners.size(); }
};

struct TwistRegion {
    std::vector<int> crossings;  // ordered along the bigon chain

    std::size_t length() const noexcept { return crossings.size(); }
};

// Per link component traversal direction; component i is reversed relative
// to the default orientation when flips[i] is set.
struct Orientation {
    std::vector<bool> flips;
};

// Immutable planar link diagram backed by a PD code.  Construction validates
// label integrity and planarity, so every Diagram value is well formed.
class Diagram {
public:
    Diagram() = default;

    // Throws BadLabels or NonPlanar.
    Diagram(std::vector<Crossing> crossings, int unknot_components);

    int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
    int arc_count() const noexcept { return 2 * crossing_count(); }
    int unknot_components() const noexcept { return unknots_; }
    const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
    const Crossing& crossing(int i) const { return crossings_.at(static_cast<std::size_t>(i)); }

    int label(Dart d) const { return crossings_[static_cast<std::size_t>(dart_crossing(d))].slots[static_cast<std::size_t>(dart_slot(d))]; }

    // The other occurrence of the arc leaving through `d`.
    Dart mate(Dart d) const { return mate_[static_cast<std::size_t>(d)]; }
    // Straight-through continuation of a strand entering at `d`.
    static constexpr Dart across(Dart d) noexcept { return make_dart(dart_crossing(d), dart_slot(d) + 2); }
    // Both darts carrying an arc label.
    std::array<Dart, 2> arc_darts(int label) const { return arc_ends_.at(static_cast<std::size_t>(label - 1)); }

    // Canonical text: optional "U(n)" then "X(a,b,c,d)" terms in index order.
    std::string serialize() const;

    friend bool operator==(const Diagram& a, const Diagram& b) {
        return a.unknots_ == b.unknots_ && a.crossings_ == b.crossings_;
    }

private:
    std::vector<Crossing> crossings_;
    int unknots_ = 0;
    std::vector<Dart> mate_;
    std::vector<std::array<Dart, 2>> arc_ends_;
};

// --- parsing ---------------------------------------------------------------

// Grammar: optional `U(n)` followed by whitespace-separated `X(a,b,c,d)`.
// Throws MalformedCode, BadLabels or NonPlanar.
Diagram parse_pd(std::string_view text);

// --- structure -------------------------------------------------------------

// Dart sequences of each link component that has crossings, in default
// orientation (see component_orientation_darts).
struct LinkComponent {
    std::vector<Dart> incoming;  // darts where the component enters a crossing, in order
};

std::vector<LinkComponent> link_components(const Diagram& d);

// Number of link components, including crossing-free circles.
int components(const Diagram& d);

// Connected pieces of the underlying 4-valent graph (crossing index sets).
std::vector<std::vector<int>> map_pieces(const Diagram& d);

// True iff the projection is a single connected piece: either c >= 1 with one
// piece and no free circles, or c == 0 with at most one circle.
bool is_connected(const Diagram& d);

std::vector<Face> faces(const Diagram& d);
std::vector<Face> faces_of_piece(const Diagram& d, const std::vector<int>& piece);

bool is_alternating(const Diagram& d);

// A crossing is nugatory when one face meets it at two corners.
bool has_nugatory_crossing(const Diagram& d);

// Throws Disconnected.
bool is_prime_diagram(const Diagram& d);

std::vector<TwistRegion> twist_regions(const Diagram& d);
int twist_number(const Diagram& d);

bool is_twist_reduced(const Diagram& d);

// Connected, alternating and one twist region holding every crossing: the
// standard diagram of a (2,p) torus link.
bool is_torus_2p_diagram(const Diagram& d);

// --- orientation -----------------------------------------------------------

Orientation default_orientation(const Diagram& d);

// For each dart, whether the oriented strand enters the crossing there.
std::vector<bool> incoming_darts(const Diagram& d, const Orientation& o);

// +1 / -1 per crossing.
std::vector<int> crossing_signs(const Diagram& d, const Orientation& o);
int writhe(const Diagram& d, const Orientation& o);

// All 2^(k-1) orientations up to global reversal (component 0 never flipped).
std::vector<Orientation> orientation_classes(const Diagram& d);

// --- moves -----------------------------------------------------------------

// Resolve one crossing; labels are compacted by ascending old label and a
// closed-off crossing-free circle increments unknot_components.
Diagram smooth(const Diagram& d, int crossing, Smoothing choice);

// Add a monogon on `arc` (for c == 0 the arc argument is ignored and one free
// circle is consumed).  The writhe changes by `sign`.
Diagram add_kink(const Diagram& d, int arc, KinkSign sign);

// Swap over and under at every crossing.
Diagram mirror(const Diagram& d);

// Relabel arcs in first-appearance order (crossings in index order).
Diagram relabel_canonical(const Diagram& d);

}  // namespace crosscap

#endif  // CROSSCAP_DIAGRAM_HPP
