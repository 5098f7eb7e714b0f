#pragma once

#include "smo/rational.hpp"

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace smo {

enum class Dir : int { E = 0, N = 1, W = 2, S = 3 };

inline Dir rot_ccw(Dir d, int k = 1) { return Dir(((int(d) + k) % 4 + 4) % 4); }
inline Dir rot_cw(Dir d, int k = 1) { return rot_ccw(d, -k); }
inline Dir opposite(Dir d) { return rot_ccw(d, 2); }
inline bool is_horizontal(Dir d) { return d == Dir::E || d == Dir::W; }
char dir_char(Dir d);
std::optional<Dir> dir_from_char(char c);

struct Point {
    Rat x, y;
    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
};

Point unit(Dir d);
inline Point scaled(Dir d, const Rat& r) { Point u = unit(d); return {u.x * r, u.y * r}; }

// Axis-aligned segment. a == b is the zero-length bookkeeping case; it is
// dropped when curves are finalized and never counted in complexity.
struct SegmentPiece {
    Point a, b;
    SegmentPiece(Point a_, Point b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a.x != b.x && a.y != b.y) throw std::invalid_argument("segment not axis-aligned");
    }
    bool degenerate() const { return a == b; }
    bool horizontal() const { return a.y == b.y && a.x != b.x; }
    bool vertical() const { return a.x == b.x && a.y != b.y; }
};

// Circular arc spanning 1..3 quarter turns whose endpoints sit at axis
// directions from the center, so both endpoint tangents are axis-aligned.
struct ArcPiece {
    Point center;
    Rat radius;
    Dir start_dir;       // direction from center to the start point
    int quarter_turns;   // 1 = quarter, 2 = semi, 3 = three-quarter
    bool ccw;

    ArcPiece(Point c, Rat r, Dir sd, int qt, bool ccw_)
        : center(std::move(c)), radius(std::move(r)), start_dir(sd), quarter_turns(qt), ccw(ccw_) {
        if (radius.sign() <= 0) throw std::invalid_argument("arc radius must be positive");
        if (qt < 1 || qt > 3) throw std::invalid_argument("arc quarter_turns must be 1..3");
    }

    Dir end_dir() const { return ccw ? rot_ccw(start_dir, quarter_turns) : rot_cw(start_dir, quarter_turns); }
    Point start() const { return center + scaled(start_dir, radius); }
    Point end() const { return center + scaled(end_dir(), radius); }
    Dir tangent_at_start() const { return ccw ? rot_ccw(start_dir) : rot_cw(start_dir); }
    Dir tangent_at_end() const { return ccw ? rot_ccw(end_dir()) : rot_cw(end_dir()); }

    // slots 0..7: even = axis direction (2*dir), odd = open quadrant ccw of it
    bool covers_slot(int slot) const;
};

using Piece = std::variant<SegmentPiece, ArcPiece>;

Point piece_start(const Piece& p);
Point piece_end(const Piece& p);
bool piece_degenerate(const Piece& p);

enum class End { Start, Finish };

// Direction of travel at the given end (leaving for Start, arriving for Finish).
// Zero-length segments have no tangent.
std::optional<Dir> endpoint_tangent(const Piece& p, End which);

struct Box {
    Rat xlo, ylo, xhi, yhi;
    void include(const Point& p);
    void merge(const Box& o);
    bool strictly_disjoint(const Box& o) const;
};
Box piece_bbox(const Piece& p);

// Edge drawn as an alternating chain of segments and arcs. Construction
// drops zero-length segments and checks the chain is connected.
class EdgeCurve {
public:
    EdgeCurve() = default;
    explicit EdgeCurve(std::vector<Piece> pieces);

    const std::vector<Piece>& pieces() const { return pieces_; }
    int complexity() const { return static_cast<int>(pieces_.size()); }
    Point start() const { return piece_start(pieces_.front()); }
    Point end() const { return piece_end(pieces_.back()); }
    Dir start_tangent() const;
    Dir end_tangent() const;
    EdgeCurve reversed() const;
    Box bbox() const;

private:
    std::vector<Piece> pieces_;
};

// True iff every junction of consecutive pieces has matching tangents.
// Chains whose endpoints do not meet throw broken_chain.
struct broken_chain : std::runtime_error {
    using std::runtime_error::runtime_error;
};
bool is_smooth(const EdgeCurve& c);

bool point_on_piece(const Point& p, const Piece& piece);

// True iff the pieces share any point that is not in allowed_shared
// (touching and overlap both count as crossing).
bool pieces_cross(const Piece& p, const Piece& q, const std::vector<Point>& allowed_shared);

struct CurveRecord {
    int u = 0, v = 0;   // graph endpoints
    EdgeCurve curve;
};

struct CrossingWitness {
    int curve_a = 0, curve_b = 0;   // indices into the input list
    int piece_a = 0, piece_b = 0;
};

// Pairwise piece tests over a set of edge curves; intersections at shared
// graph endpoints are allowed, everything else is a crossing. Also rejects
// self-intersecting curves.
std::optional<CrossingWitness> drawing_planar(const std::vector<CurveRecord>& curves,
                                              const std::vector<Point>& vertex_points);

Box curves_bbox(const std::vector<CurveRecord>& curves);

Piece reverse_piece(const Piece& p);
Piece translate(const Piece& p, const Point& delta);
Piece scale(const Piece& p, const Rat& factor);           // factor > 0, about origin
Piece rotate_ccw_quarters(const Piece& p, int k);          // about origin
EdgeCurve translate(const EdgeCurve& c, const Point& delta);
EdgeCurve scale(const EdgeCurve& c, const Rat& factor);
EdgeCurve rotate_ccw_quarters(const EdgeCurve& c, int k);
Point rotate_ccw_quarters(const Point& p, int k);

}  // namespace smo
