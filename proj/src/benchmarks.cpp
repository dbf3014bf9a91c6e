#include "rsg/benchmarks.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "rsg/automaton_ops.hpp"
#include "rsg/errors.hpp"
#include "rsg/re.hpp"
#include "rsg/transducer.hpp"

namespace rsg {

namespace {

using re::Expr;

// ---------------------------------------------------------------------------
// Unary pair tracks.
//
// Grid positions are encoded in unary on two-component bit-vector symbols:
// component values are the lengths of the leading 1-runs. A track is valid
// when both components are of the form 1^k 0^rest, which as a regex is
// 11* (10* | 01*) 00*. The count of mismatching symbols (10 or 01) is the
// absolute difference of the two component values, so bounded-difference
// sets stay regular.
// ---------------------------------------------------------------------------

struct PairSyms {
    Symbol m00, m10, m01, m11;
};

Expr track_valid(const PairSyms& p) {
    return Expr::seq({Expr::star(Expr::sym(p.m11)),
                      Expr::alt({Expr::star(Expr::sym(p.m10)), Expr::star(Expr::sym(p.m01))}),
                      Expr::star(Expr::sym(p.m00))});
}

Expr track_mismatch_exact(const PairSyms& p, int k) {
    if (k == 0)
        return Expr::seq({Expr::star(Expr::sym(p.m11)), Expr::star(Expr::sym(p.m00))});
    return Expr::seq({Expr::star(Expr::sym(p.m11)),
                      Expr::alt({Expr::times(Expr::sym(p.m10), k),
                                 Expr::times(Expr::sym(p.m01), k)}),
                      Expr::star(Expr::sym(p.m00))});
}

Expr track_mismatch_at_least(const PairSyms& p, int k) {
    if (k == 0) return track_valid(p);
    return Expr::seq({Expr::star(Expr::sym(p.m11)),
                      Expr::alt({Expr::at_least(Expr::sym(p.m10), k),
                                 Expr::at_least(Expr::sym(p.m01), k)}),
                      Expr::star(Expr::sym(p.m00))});
}

Expr track_mismatch_at_most(const PairSyms& p, int k) {
    std::vector<Expr> cases;
    for (int i = 0; i <= k; ++i) cases.push_back(track_mismatch_exact(p, i));
    return Expr::alt(std::move(cases));
}

// Transducer patterns: one component changes by one, the other component and
// all other cells are copied. The flip cell is forced to the end of the
// component's 1-run, so unary shape is preserved and out-of-range moves
// simply have no run.

struct PairMoves {
    const Alphabet& alphabet;
    PairSyms p;

    Expr copy_track() const {
        return Expr::star(te::copy_any(alphabet, {p.m00, p.m10, p.m01, p.m11}));
    }
    Expr comp0_inc() const {
        return Expr::seq({Expr::star(te::copy_any(alphabet, {p.m10, p.m11})),
                          te::map_any(alphabet, {{p.m00, p.m10}, {p.m01, p.m11}}),
                          Expr::star(te::copy_any(alphabet, {p.m00, p.m01}))});
    }
    Expr comp0_dec() const {
        return Expr::seq({Expr::star(te::copy_any(alphabet, {p.m10, p.m11})),
                          te::map_any(alphabet, {{p.m10, p.m00}, {p.m11, p.m01}}),
                          Expr::star(te::copy_any(alphabet, {p.m00, p.m01}))});
    }
    Expr comp1_inc() const {
        return Expr::seq({Expr::star(te::copy_any(alphabet, {p.m01, p.m11})),
                          te::map_any(alphabet, {{p.m00, p.m01}, {p.m10, p.m11}}),
                          Expr::star(te::copy_any(alphabet, {p.m00, p.m10}))});
    }
    Expr comp1_dec() const {
        return Expr::seq({Expr::star(te::copy_any(alphabet, {p.m01, p.m11})),
                          te::map_any(alphabet, {{p.m01, p.m00}, {p.m11, p.m10}}),
                          Expr::star(te::copy_any(alphabet, {p.m00, p.m10}))});
    }
    // All components equal at 0 / at the track bound.
    Expr comp0_all_zero_copy() const {
        return Expr::star(te::copy_any(alphabet, {p.m00, p.m01}));
    }
    Expr comp0_all_one_copy() const {
        return Expr::star(te::copy_any(alphabet, {p.m10, p.m11}));
    }
};

Symbol sym(const Alphabet& alphabet, const char* name) {
    auto s = alphabet.find(name);
    if (!s) throw ContractError(std::string("missing benchmark symbol ") + name);
    return *s;
}

struct Benchmark {
    BenchmarkInfo info;
    std::string notes;
    std::function<RegularSafetyGame()> build;
};

// ---------------------------------------------------------------------------
// Grid games on two paired tracks separated by S: box, solitary-box,
// evasion, follow, robot-vacuum. The first symbol marks whose turn it is.
// ---------------------------------------------------------------------------

struct GridWorld {
    Alphabet alphabet;
    Symbol t0, t1, sep;
    PairSyms pair;
    PairMoves moves;

    explicit GridWorld(std::vector<std::string> symbols)
        : alphabet(std::move(symbols)),
          t0(sym(alphabet, "t0")),
          t1(sym(alphabet, "t1")),
          sep(sym(alphabet, "S")),
          pair{sym(alphabet, "00"), sym(alphabet, "10"), sym(alphabet, "01"),
               sym(alphabet, "11")},
          moves{alphabet, pair} {}

    Expr word(Expr turn, Expr x, Expr y) const {
        return Expr::seq({std::move(turn), std::move(x), Expr::sym(sep), std::move(y)});
    }
    Expr move(Symbol from, Symbol to, Expr x, Expr y) const {
        return Expr::seq({te::map_any(alphabet, {{from, to}}), std::move(x),
                          te::copy_any(alphabet, {sep}), std::move(y)});
    }
    Nfa nfa(const Expr& e) const { return re::compile(e, alphabet); }

    // Both tracks at least `k` symbols long, any content.
    Expr min_track_lengths(int k) const {
        Expr any = Expr::any_of({pair.m00, pair.m10, pair.m01, pair.m11});
        Expr anyturn = Expr::any_of({t0, t1});
        return Expr::seq({anyturn, Expr::at_least(any, k), Expr::sym(sep),
                          Expr::at_least(any, k)});
    }
};

// Box: one robot on an n x m grid. Player 0 moves it vertically, Player 1
// horizontally. The y track pairs the robot's row (component 0) with a fixed
// reference row marking the stripe's center (component 1); the robot must
// stay within one row of the reference. A stripe of width 3 around the
// middle is the instance where the reference row is placed at the center;
// the parameterization covers every placement. The x track uses component 0
// only.
RegularSafetyGame build_box_like(bool solitary) {
    GridWorld g({"t0", "t1", "S", "00", "10", "01", "11"});
    Expr xtrack = Expr::seq(
        {Expr::star(Expr::sym(g.pair.m10)), Expr::star(Expr::sym(g.pair.m00))});
    Expr yvalid = track_valid(g.pair);

    Nfa v0 = g.nfa(g.word(Expr::sym(g.t0), xtrack, yvalid));
    Nfa v1 = solitary ? re::compile(Expr::none(), g.alphabet)
                      : g.nfa(g.word(Expr::sym(g.t1), xtrack, yvalid));

    Expr turns = solitary ? Expr::sym(g.t0) : Expr::any_of({g.t0, g.t1});
    Nfa bad = g.nfa(g.word(turns, xtrack, track_mismatch_at_least(g.pair, 2)));

    Nfa initial = intersect(g.nfa(g.word(turns, xtrack, track_mismatch_exact(g.pair, 0))),
                            g.nfa(g.min_track_lengths(2)));

    Expr xcopy = Expr::star(te::copy_any(g.alphabet, {g.pair.m00, g.pair.m10}));
    Expr xmove = Expr::alt({
        Expr::seq({Expr::star(te::copy_any(g.alphabet, {g.pair.m10})),
                   te::map_any(g.alphabet, {{g.pair.m00, g.pair.m10}}),
                   Expr::star(te::copy_any(g.alphabet, {g.pair.m00}))}),
        Expr::seq({Expr::star(te::copy_any(g.alphabet, {g.pair.m10})),
                   te::map_any(g.alphabet, {{g.pair.m10, g.pair.m00}}),
                   Expr::star(te::copy_any(g.alphabet, {g.pair.m00}))}),
    });
    Expr ymove = Expr::alt({g.moves.comp0_inc(), g.moves.comp0_dec()});

    Expr edges =
        solitary ? Expr::alt({g.move(g.t0, g.t0, xmove, g.moves.copy_track()),
                              g.move(g.t0, g.t0, xcopy, ymove)})
                 : Expr::alt({g.move(g.t0, g.t1, xcopy, ymove),
                              g.move(g.t1, g.t0, xmove, g.moves.copy_track())});

    RegularSafetyGame game{g.alphabet, v0, v1, te::compile(edges, g.alphabet), initial, bad};
    validate_game(game);
    return game;
}

// Evasion: two robots with king moves (stay allowed). Player 0's robot may
// step past any boundary, which absorbs the play into a safe esc-marked
// vertex. Bad: both robots on the same cell.
RegularSafetyGame build_evasion() {
    GridWorld g({"t0", "t1", "esc", "S", "00", "10", "01", "11"});
    Symbol esc = sym(g.alphabet, "esc");

    Expr valid = track_valid(g.pair);
    Nfa v0 = g.nfa(g.word(Expr::sym(g.t0), valid, valid));
    Nfa v1 = g.nfa(g.word(Expr::any_of({g.t1, esc}), valid, valid));

    Nfa bad = g.nfa(g.word(Expr::any_of({g.t0, g.t1}), track_mismatch_exact(g.pair, 0),
                           track_mismatch_exact(g.pair, 0)));

    // Robots apart, Player 0 to move.
    Nfa initial = union_of(
        g.nfa(g.word(Expr::sym(g.t0), track_mismatch_at_least(g.pair, 1), valid)),
        g.nfa(g.word(Expr::sym(g.t0), track_mismatch_exact(g.pair, 0),
                     track_mismatch_at_least(g.pair, 1))));

    auto steps = [&](bool player_zero) {
        return std::vector<Expr>{player_zero ? g.moves.comp0_inc() : g.moves.comp1_inc(),
                                 player_zero ? g.moves.comp0_dec() : g.moves.comp1_dec(),
                                 g.moves.copy_track()};
    };
    auto king_moves = [&](Symbol from, Symbol to, bool player_zero) {
        std::vector<Expr> combos;
        for (const Expr& dx : steps(player_zero))
            for (const Expr& dy : steps(player_zero)) combos.push_back(g.move(from, to, dx, dy));
        return Expr::alt(std::move(combos));
    };

    // Escape: legal exactly at a boundary; the configuration freezes.
    std::vector<Expr> escapes{
        g.move(g.t0, esc, g.moves.comp0_all_zero_copy(), g.moves.copy_track()),
        g.move(g.t0, esc, g.moves.comp0_all_one_copy(), g.moves.copy_track()),
        g.move(g.t0, esc, g.moves.copy_track(), g.moves.comp0_all_zero_copy()),
        g.move(g.t0, esc, g.moves.copy_track(), g.moves.comp0_all_one_copy()),
    };

    Expr edges = Expr::alt({king_moves(g.t0, g.t1, true), king_moves(g.t1, g.t0, false),
                            Expr::alt(std::move(escapes)),
                            g.move(esc, esc, g.moves.copy_track(), g.moves.copy_track())});

    RegularSafetyGame game{g.alphabet, v0, v1, te::compile(edges, g.alphabet), initial, bad};
    validate_game(game);
    return game;
}

// Follow: both robots forced to move one cell per turn (4-directional);
// Player 0 must keep the Manhattan distance at most 2. Initially the robots
// share a cell and Player 1 moves first.
RegularSafetyGame build_follow() {
    GridWorld g({"t0", "t1", "S", "00", "10", "01", "11"});
    Expr valid = track_valid(g.pair);
    Nfa v0 = g.nfa(g.word(Expr::sym(g.t0), valid, valid));
    Nfa v1 = g.nfa(g.word(Expr::sym(g.t1), valid, valid));

    Expr anyturn = Expr::any_of({g.t0, g.t1});
    // Manhattan distance >= 3 split by the x-track mismatch count.
    Expr far = Expr::alt({
        g.word(anyturn, track_mismatch_at_least(g.pair, 3), valid),
        g.word(anyturn, track_mismatch_exact(g.pair, 2), track_mismatch_at_least(g.pair, 1)),
        g.word(anyturn, track_mismatch_exact(g.pair, 1), track_mismatch_at_least(g.pair, 2)),
        g.word(anyturn, track_mismatch_exact(g.pair, 0), track_mismatch_at_least(g.pair, 3)),
    });
    Nfa bad = g.nfa(far);

    Nfa initial = g.nfa(g.word(Expr::sym(g.t1), track_mismatch_exact(g.pair, 0),
                               track_mismatch_exact(g.pair, 0)));

    auto four_dir = [&](Symbol from, Symbol to, bool player_zero) {
        Expr dx_inc = player_zero ? g.moves.comp0_inc() : g.moves.comp1_inc();
        Expr dx_dec = player_zero ? g.moves.comp0_dec() : g.moves.comp1_dec();
        return Expr::alt({g.move(from, to, dx_inc, g.moves.copy_track()),
                          g.move(from, to, dx_dec, g.moves.copy_track()),
                          g.move(from, to, g.moves.copy_track(), dx_inc),
                          g.move(from, to, g.moves.copy_track(), dx_dec)});
    };
    Expr edges = Expr::alt({four_dir(g.t0, g.t1, true), four_dir(g.t1, g.t0, false)});

    RegularSafetyGame game{g.alphabet, v0, v1, te::compile(edges, g.alphabet), initial, bad};
    validate_game(game);
    return game;
}

// Robot vacuum cleaner: the robot (Player 0) must keep moving and may never
// step onto the human's cell; the human (Player 1) moves or stays and may
// step onto the robot, whereupon the robot has to move away. Bad is a shared
// cell at Player 1's turn, i.e. a collision the robot caused.
RegularSafetyGame build_vacuum() {
    GridWorld g({"t0", "t1", "S", "00", "10", "01", "11"});
    Expr valid = track_valid(g.pair);
    Nfa v0 = g.nfa(g.word(Expr::sym(g.t0), valid, valid));
    Nfa v1 = g.nfa(g.word(Expr::sym(g.t1), valid, valid));

    Nfa bad = g.nfa(g.word(Expr::sym(g.t1), track_mismatch_exact(g.pair, 0),
                           track_mismatch_exact(g.pair, 0)));

    // At least a 2 x 2 grid, robots apart, either player to move.
    Expr anyturn = Expr::any_of({g.t0, g.t1});
    Expr apart = Expr::alt({
        g.word(anyturn, track_mismatch_at_least(g.pair, 1), valid),
        g.word(anyturn, track_mismatch_exact(g.pair, 0), track_mismatch_at_least(g.pair, 1)),
    });
    Nfa initial = intersect(g.nfa(apart), g.nfa(g.min_track_lengths(1)));

    auto four_dir = [&](Symbol from, Symbol to, bool player_zero, bool allow_stay) {
        Expr inc = player_zero ? g.moves.comp0_inc() : g.moves.comp1_inc();
        Expr dec = player_zero ? g.moves.comp0_dec() : g.moves.comp1_dec();
        std::vector<Expr> combos{g.move(from, to, inc, g.moves.copy_track()),
                                 g.move(from, to, dec, g.moves.copy_track()),
                                 g.move(from, to, g.moves.copy_track(), inc),
                                 g.move(from, to, g.moves.copy_track(), dec)};
        if (allow_stay)
            combos.push_back(g.move(from, to, g.moves.copy_track(), g.moves.copy_track()));
        return Expr::alt(std::move(combos));
    };
    Expr edges =
        Expr::alt({four_dir(g.t0, g.t1, true, false), four_dir(g.t1, g.t0, false, true)});

    RegularSafetyGame game{g.alphabet, v0, v1, te::compile(edges, g.alphabet), initial, bad};
    validate_game(game);
    return game;
}

// Diagonal: one robot on a square grid, both coordinates paired on a single
// track (component 0: column, moved by Player 1; component 1: row, moved by
// Player 0). The robot must stay within two cells of the diagonal.
RegularSafetyGame build_diagonal() {
    Alphabet alphabet({"t0", "t1", "00", "10", "01", "11"});
    Symbol t0 = sym(alphabet, "t0");
    Symbol t1 = sym(alphabet, "t1");
    PairSyms pair{sym(alphabet, "00"), sym(alphabet, "10"), sym(alphabet, "01"),
                  sym(alphabet, "11")};
    PairMoves moves{alphabet, pair};

    auto word = [&](Expr turn, Expr track) {
        return Expr::seq({std::move(turn), std::move(track)});
    };
    Nfa v0 = re::compile(word(Expr::sym(t0), track_valid(pair)), alphabet);
    Nfa v1 = re::compile(word(Expr::sym(t1), track_valid(pair)), alphabet);

    Nfa bad = re::compile(
        word(Expr::any_of({t0, t1}), track_mismatch_at_least(pair, 3)), alphabet);

    Expr anypair = Expr::any_of({pair.m00, pair.m10, pair.m01, pair.m11});
    Nfa initial = intersect(
        re::compile(word(Expr::any_of({t0, t1}), track_mismatch_exact(pair, 0)), alphabet),
        re::compile(Expr::seq({Expr::any_of({t0, t1}), Expr::at_least(anypair, 2)}),
                    alphabet));

    auto turnflip = [&](Symbol from, Symbol to, Expr step) {
        return Expr::seq({te::map_any(alphabet, {{from, to}}), std::move(step)});
    };
    Expr edges = Expr::alt({
        turnflip(t0, t1, Expr::alt({moves.comp1_inc(), moves.comp1_dec()})),
        turnflip(t1, t0, Expr::alt({moves.comp0_inc(), moves.comp0_dec()})),
    });

    RegularSafetyGame game{alphabet, v0, v1, te::compile(edges, alphabet), initial, bad};
    validate_game(game);
    return game;
}

// Nim, misere play: three unary piles with capacity padding, a pile
// delimiter, a leading turn marker. Taking the last chip loses, so all-empty
// piles at Player 1's turn (Player 0 moved last) are bad; terminal positions
// loop forever.
RegularSafetyGame build_nim() {
    Alphabet alphabet({"t0", "t1", "1", "0", "D"});
    Symbol t0 = sym(alphabet, "t0");
    Symbol t1 = sym(alphabet, "t1");
    Symbol one = sym(alphabet, "1");
    Symbol zero = sym(alphabet, "0");
    Symbol delim = sym(alphabet, "D");

    Expr pile = Expr::seq({Expr::star(Expr::sym(one)), Expr::star(Expr::sym(zero))});
    Expr empty_pile = Expr::star(Expr::sym(zero));
    auto word = [&](Expr turn, Expr p1, Expr p2, Expr p3) {
        return Expr::seq({std::move(turn), std::move(p1), Expr::sym(delim), std::move(p2),
                          Expr::sym(delim), std::move(p3)});
    };

    Nfa v0 = re::compile(word(Expr::sym(t0), pile, pile, pile), alphabet);
    Nfa v1 = re::compile(word(Expr::sym(t1), pile, pile, pile), alphabet);
    Nfa bad = re::compile(word(Expr::sym(t1), empty_pile, empty_pile, empty_pile), alphabet);
    Nfa initial = re::compile(
        word(Expr::sym(t0), Expr::seq({Expr::at_least(Expr::sym(one), 2), empty_pile}),
             empty_pile, empty_pile),
        alphabet);

    Expr copy_pile = Expr::seq({Expr::star(te::copy_any(alphabet, {one})),
                                Expr::star(te::copy_any(alphabet, {zero}))});
    Expr copy_empty = Expr::star(te::copy_any(alphabet, {zero}));
    Expr copy_delim = te::copy_any(alphabet, {delim});
    // Remove one or more chips: flip a suffix of the 1-run to 0.
    Expr take = Expr::seq({Expr::star(te::copy_any(alphabet, {one})),
                           Expr::plus(te::map_any(alphabet, {{one, zero}})),
                           Expr::star(te::copy_any(alphabet, {zero}))});

    auto mover = [&](Symbol from, Symbol to) {
        Expr flip = te::map_any(alphabet, {{from, to}});
        return Expr::alt({
            Expr::seq({flip, take, copy_delim, copy_pile, copy_delim, copy_pile}),
            Expr::seq({flip, copy_pile, copy_delim, take, copy_delim, copy_pile}),
            Expr::seq({flip, copy_pile, copy_delim, copy_pile, copy_delim, take}),
        });
    };
    auto end_loop = [&](Symbol t) {
        return Expr::seq({te::map_any(alphabet, {{t, t}}), copy_empty, copy_delim, copy_empty,
                          copy_delim, copy_empty});
    };
    Expr edges = Expr::alt({mover(t0, t1), mover(t1, t0), end_loop(t0), end_loop(t1)});

    RegularSafetyGame game{alphabet, v0, v1, te::compile(edges, alphabet), initial, bad};
    validate_game(game);
    return game;
}

// Control unit: one symbol per power plant, four abstract temperature levels
// (3 = critical). The controller cools one plant per turn or idles; the
// environment heats one plant per turn or idles.
RegularSafetyGame build_control_unit() {
    Alphabet alphabet({"t0", "t1", "0", "1", "2", "3"});
    Symbol t0 = sym(alphabet, "t0");
    Symbol t1 = sym(alphabet, "t1");
    Symbol l0 = sym(alphabet, "0");
    Symbol l1 = sym(alphabet, "1");
    Symbol l2 = sym(alphabet, "2");
    Symbol l3 = sym(alphabet, "3");

    Expr plant = Expr::any_of({l0, l1, l2, l3});
    Nfa v0 = re::compile(Expr::seq({Expr::sym(t0), Expr::plus(plant)}), alphabet);
    Nfa v1 = re::compile(Expr::seq({Expr::sym(t1), Expr::plus(plant)}), alphabet);
    Nfa bad = re::compile(Expr::seq({Expr::any_of({t0, t1}), Expr::star(plant),
                                     Expr::sym(l3), Expr::star(plant)}),
                          alphabet);
    Nfa initial = re::compile(
        Expr::seq({Expr::any_of({t0, t1}), Expr::plus(Expr::sym(l0))}), alphabet);

    Expr copy_plants = Expr::star(te::copy_any(alphabet, {l0, l1, l2, l3}));
    Expr cool = te::map_any(alphabet, {{l1, l0}, {l2, l1}, {l3, l2}});
    Expr heat = te::map_any(alphabet, {{l0, l1}, {l1, l2}, {l2, l3}});
    Expr edges = Expr::alt({
        Expr::seq({te::map_any(alphabet, {{t0, t1}}),
                   Expr::alt({Expr::seq({copy_plants, cool, copy_plants}), copy_plants})}),
        Expr::seq({te::map_any(alphabet, {{t1, t0}}),
                   Expr::alt({Expr::seq({copy_plants, heat, copy_plants}), copy_plants})}),
    });

    RegularSafetyGame game{alphabet, v0, v1, te::compile(edges, alphabet), initial, bad};
    validate_game(game);
    return game;
}

// Resource allocation: one symbol per process (i/r/c = idle, requesting,
// critical; uppercase marks the token holder). The controller moves the
// token one step right on a ring, or keeps it when the holder is critical or
// everyone is idle. The environment toggles idle/requesting, promotes the
// requesting token holder into the critical section, or retires a critical
// holder to idle. Bad: some process critical without the token.
RegularSafetyGame build_resource_allocation() {
    Alphabet alphabet({"t0", "t1", "i", "r", "c", "I", "R", "C"});
    Symbol t0 = sym(alphabet, "t0");
    Symbol t1 = sym(alphabet, "t1");
    Symbol pi = sym(alphabet, "i");
    Symbol pr = sym(alphabet, "r");
    Symbol pc = sym(alphabet, "c");
    Symbol ti = sym(alphabet, "I");
    Symbol tr = sym(alphabet, "R");
    Symbol tc = sym(alphabet, "C");

    Expr lower = Expr::any_of({pi, pr, pc});
    Expr upper = Expr::any_of({ti, tr, tc});
    Expr shape = Expr::seq({Expr::star(lower), upper, Expr::star(lower)});
    Nfa v0 = re::compile(Expr::seq({Expr::sym(t0), shape}), alphabet);
    Nfa v1 = re::compile(Expr::seq({Expr::sym(t1), shape}), alphabet);

    Expr anyproc = Expr::any_of({pi, pr, pc, ti, tr, tc});
    Nfa bad = intersect(
        re::compile(Expr::seq({Expr::any_of({t0, t1}), shape}), alphabet),
        re::compile(Expr::seq({Expr::any_of({t0, t1}), Expr::star(anyproc), Expr::sym(pc),
                               Expr::star(anyproc)}),
                    alphabet));

    Nfa initial = re::compile(Expr::seq({Expr::any_of({t0, t1}), Expr::star(Expr::sym(pi)),
                                         Expr::sym(ti), Expr::star(Expr::sym(pi))}),
                              alphabet);

    Expr copy_lower = Expr::star(te::copy_any(alphabet, {pi, pr, pc}));
    Expr copy_any_proc = Expr::star(te::copy_any(alphabet, {pi, pr, pc, ti, tr, tc}));
    Expr drop = te::map_any(alphabet, {{ti, pi}, {tr, pr}, {tc, pc}});
    Expr promote = te::map_any(alphabet, {{pi, ti}, {pr, tr}, {pc, tc}});

    Expr p0 = Expr::seq(
        {te::map_any(alphabet, {{t0, t1}}),
         Expr::alt({
             Expr::seq({copy_lower, drop, promote, copy_lower}),         // step right
             Expr::seq({promote, copy_lower, drop}),                     // wrap around
             te::copy_any(alphabet, {ti, tr, tc}),                       // ring of one
             Expr::seq({copy_lower, te::copy_any(alphabet, {tc}), copy_lower}), // keep: critical
             Expr::seq({Expr::star(te::copy_any(alphabet, {pi})), te::copy_any(alphabet, {ti}),
                        Expr::star(te::copy_any(alphabet, {pi}))}),      // keep: all idle
         })});
    Expr p1 = Expr::seq(
        {te::map_any(alphabet, {{t1, t0}}),
         Expr::seq({copy_any_proc,
                    te::map_any(alphabet, {{pi, pr}, {pr, pi}, {ti, tr}, {tr, ti},
                                           {tr, tc}, {tc, ti}}),
                    copy_any_proc})});
    Expr edges = Expr::alt({p0, p1});

    RegularSafetyGame game{alphabet, v0, v1, te::compile(edges, alphabet), initial, bad};
    validate_game(game);
    return game;
}

const std::vector<Benchmark>& catalog() {
    static const std::vector<Benchmark> benchmarks = [] {
        std::vector<Benchmark> list;
        list.push_back({{"box", "robot in a horizontal stripe, vertical vs horizontal control", 6},
                        "Word layout: turn marker (t0/t1), x track over {00,10} (component 0 =\n"
                        "robot column in unary), separator S, y track over pair symbols\n"
                        "(component 0 = robot row, component 1 = fixed stripe-center row).\n"
                        "Player 0 moves the robot one row up or down, Player 1 one column left\n"
                        "or right. Bad: the robot leaves the three-row stripe around the marked\n"
                        "center row, i.e. the y track carries two or more mismatched symbols.\n"
                        "Initially the robot sits on the center row of a grid of size >= 3x3.",
                        [] { return build_box_like(false); }});
        list.push_back(
            {{"control-unit", "cooling n power plants below the critical level", 2},
             "Word layout: turn marker, then one symbol per plant with temperature\n"
             "levels 0..3 (3 = critical). Player 0 cools one plant by one level or\n"
             "idles; Player 1 heats one plant by one level or idles. Bad: any plant\n"
             "at level 3. Initially every plant is at level 0.",
             build_control_unit});
        list.push_back(
            {{"diagonal", "robot within two cells of the diagonal of a square grid", 3},
             "Word layout: turn marker, then one paired unary track (component 0 =\n"
             "column, moved by Player 1; component 1 = row, moved by Player 0). The\n"
             "distance to the diagonal is the track's mismatch count. Bad: three or\n"
             "more mismatches. Initially the robot is on the diagonal of a grid of\n"
             "size >= 3x3.",
             build_diagonal});
        list.push_back(
            {{"evasion", "pursuit with king moves and an out-of-bounds escape", 3},
             "Word layout: turn marker (t0/t1/esc), x track, separator S, y track;\n"
             "pair component 0 is Player 0's robot, component 1 Player 1's. Both\n"
             "robots move at most one cell in any direction per turn. At a boundary\n"
             "Player 0 may instead step out of bounds, freezing the play in a safe\n"
             "esc-marked vertex (the paper's automatic win). Bad: both robots on the\n"
             "same cell. Initially the robots are apart and Player 0 moves.",
             build_evasion});
        list.push_back(
            {{"follow", "keeping a robot within Manhattan distance two of a target", 2},
             "Word layout: turn marker, x track, separator S, y track; component 0 =\n"
             "Player 0's robot, component 1 = Player 1's. Both robots move exactly\n"
             "one cell horizontally or vertically per turn. Bad: Manhattan distance\n"
             "three or more (total mismatch count over both tracks). Initially both\n"
             "robots share a cell and Player 1 moves; t1 plays the role of the\n"
             "grid-world automaton's [1,1] turn vector, 0-padding appends 00 pairs.",
             build_follow});
        list.push_back(
            {{"nim", "three-pile misere Nim", 5},
             "Word layout: turn marker, three unary piles (1-run = pile size, 0s pad\n"
             "to the pile capacity) separated by D. A move removes one or more chips\n"
             "from one pile; taking the last chip loses (misere), so an all-empty\n"
             "position at Player 1's turn is bad, and terminal positions loop\n"
             "forever. Initially only the first pile is nonempty with >= 2 chips and\n"
             "Player 0 moves.",
             build_nim});
        list.push_back(
            {{"resource-allocation", "single-token mutual exclusion on a ring", 2},
             "Word layout: turn marker, one symbol per process: i/r/c = idle,\n"
             "requesting, critical; uppercase carries the single token. Player 0\n"
             "moves the token one step right (wrapping; a ring of one wraps onto\n"
             "itself), or keeps it when the holder is critical or all processes are\n"
             "idle. Player 1 toggles idle and\n"
             "requesting, promotes a requesting token holder to critical, or retires\n"
             "a critical holder to idle. Bad: a process in the critical section\n"
             "without the token. Initially all processes are idle.",
             build_resource_allocation});
        list.push_back(
            {{"robot-vacuum", "vacuum robot that must keep moving and never bump the human", 4},
             "Word layout: as in follow; component 0 = robot, component 1 = human.\n"
             "The robot moves exactly one cell per turn; the human moves one cell or\n"
             "stays. The human may step onto the robot's cell, after which the robot\n"
             "must move away; a configuration where the robot itself caused the\n"
             "collision (shared cell at Player 1's turn) is bad. Initially the grid\n"
             "is at least 2x2 and the robots are apart.",
             build_vacuum});
        list.push_back(
            {{"solitary-box", "box variant where Player 0 controls both axes", 6},
             "As box, but Player 1 owns no vertices: Player 0 moves the robot one\n"
             "cell horizontally or vertically each turn and must keep it within the\n"
             "three-row stripe around the marked center row.",
             [] { return build_box_like(true); }});
        return list;
    }();
    return benchmarks;
}

const Benchmark& find_benchmark(std::string_view name) {
    for (const Benchmark& b : catalog())
        if (b.info.name == name) return b;
    throw InputError("unknown benchmark '" + std::string(name) + "'");
}

} // namespace

std::span<const BenchmarkInfo> list_benchmarks() {
    static const std::vector<BenchmarkInfo> infos = [] {
        std::vector<BenchmarkInfo> out;
        for (const Benchmark& b : catalog()) out.push_back(b.info);
        return out;
    }();
    return infos;
}

RegularSafetyGame build_benchmark(std::string_view name) { return find_benchmark(name).build(); }

std::string generate_benchmark(std::string_view name) {
    const Benchmark& b = find_benchmark(name);
    std::ostringstream out;
    out << "# " << b.info.name << ": " << b.info.title << "\n#\n";
    std::istringstream notes(b.notes);
    std::string line;
    while (std::getline(notes, line)) out << "# " << line << '\n';
    out << "# Smallest word length with initial vertices: " << b.info.min_initial_length
        << "\n";
    out << render_game(b.build());
    return out.str();
}

} // namespace rsg
