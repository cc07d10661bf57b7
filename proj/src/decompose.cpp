#include "qrep/decompose.hpp"

#include <algorithm>
#include <sstream>

#include "qrep/canonical.hpp"

namespace qrep {

namespace {

// ------------------------------------------------------------- workspace

/// Mutable presentation plus the accumulated stripe witness:
/// wit.apply(original) == cur at all times.
struct Workspace {
    Presentation cur;
    PresWitness wit;

    explicit Workspace(const Presentation& v)
        : cur(v), wit(PresWitness::identity(v.field, v.dims())) {}

    void apply_p1(const Mat& m) {
        cur.A = m * cur.A;
        cur.G = m * cur.G;
        wit.P1 = m * wit.P1;
    }
    void apply_p2(const Mat& m) {
        cur.B = m * cur.B;
        cur.D = m * cur.D;
        wit.P2 = m * wit.P2;
    }
    void apply_q3(const Mat& m) {
        cur.A = cur.A * m;
        cur.B = cur.B * m;
        wit.Q3 = wit.Q3 * m;
    }
    void apply_q4(const Mat& m) {
        cur.G = cur.G * m;
        cur.D = cur.D * m;
        wit.Q4 = wit.Q4 * m;
    }
};

Mat perm_rows(const FieldSpec& f, const std::vector<int>& src) {
    int n = static_cast<int>(src.size());
    Mat p(f, n, n);
    for (int i = 0; i < n; ++i) p.at(i, src[i]) = Scalar::one(f);
    return p;
}

Mat perm_cols(const FieldSpec& f, const std::vector<int>& src) {
    int n = static_cast<int>(src.size());
    Mat q(f, n, n);
    for (int j = 0; j < n; ++j) q.at(src[j], j) = Scalar::one(f);
    return q;
}

/// identity plus scale * block placed at (rows x cols); rows and cols are
/// expected to be disjoint index sets (a unipotent cross-summand insert)
Mat embed_unipotent(const FieldSpec& f, int size, const std::vector<int>& rows,
                    const std::vector<int>& cols, const Mat& block, const Scalar& scale) {
    Mat m = Mat::identity(f, size);
    for (int i = 0; i < block.rows(); ++i)
        for (int j = 0; j < block.cols(); ++j)
            m.at(rows[i], cols[j]) = m.at(rows[i], cols[j]) + scale * block.at(i, j);
    return m;
}

/// identity with the square block substituted on the sub-square rows x rows
Mat embed_diag(const FieldSpec& f, int size, const std::vector<int>& rows, const Mat& block) {
    Mat m = Mat::identity(f, size);
    for (size_t i = 0; i < rows.size(); ++i) m.at(rows[i], rows[i]) = Scalar::zero(f);
    for (int i = 0; i < block.rows(); ++i)
        for (int j = 0; j < block.cols(); ++j) m.at(rows[i], rows[j]) = block.at(i, j);
    return m;
}

// ------------------------------------------------------- piece packing

struct Piece {
    Descriptor desc;
    std::array<std::vector<int>, 4> idx;  // rows1, rows2, cols3, cols4
};

void contiguous_pieces(const std::vector<Descriptor>& descs, std::array<int, 4> off,
                       std::vector<Piece>& out) {
    for (const Descriptor& d : descs) {
        Piece p;
        p.desc = d;
        DimVector dm = dim_of(d);
        for (int s = 0; s < 4; ++s) {
            for (int i = 0; i < dm[s]; ++i) p.idx[s].push_back(off[s] + i);
            off[s] += dm[s];
        }
        out.push_back(std::move(p));
    }
}

/// Sort pieces canonically and permute the workspace so cur becomes the
/// direct sum of generate() forms in sorted order.
std::vector<Descriptor> sort_and_pack(Workspace& ws, std::vector<Piece> pieces) {
    std::stable_sort(pieces.begin(), pieces.end(),
                     [](const Piece& a, const Piece& b) { return descriptor_less(a.desc, b.desc); });
    DimVector d = ws.cur.dims();
    std::array<std::vector<int>, 4> src;
    std::vector<Descriptor> descs;
    for (const Piece& p : pieces) {
        descs.push_back(p.desc);
        for (int s = 0; s < 4; ++s) src[s].insert(src[s].end(), p.idx[s].begin(), p.idx[s].end());
    }
    for (int s = 0; s < 4; ++s)
        if (static_cast<int>(src[s].size()) != d[s])
            throw std::logic_error("piece index sets do not cover the presentation");
    const FieldSpec& f = ws.cur.field;
    ws.apply_p1(perm_rows(f, src[0]));
    ws.apply_p2(perm_rows(f, src[1]));
    ws.apply_q3(perm_cols(f, src[2]));
    ws.apply_q4(perm_cols(f, src[3]));
    return descs;
}

void verify_layout(const Workspace& ws, const std::vector<Descriptor>& descs) {
    if (ws.cur != assemble(descs, ws.cur.field))
        throw std::logic_error("internal decomposition check failed");
}

struct CoreResult {
    std::vector<Descriptor> descs;  // sorted
    PresWitness w;                  // w.apply(input) == assemble(descs)
};

CoreResult decompose_core(const Presentation& v, int depth, int limit);

// -------------------------------------------------- symmetry transport

/// Witness w acts on apply_symmetry(s, V); rewrite it as a witness on V
/// (the result maps V to apply_symmetry(s^{-1}, w.apply(sV))).
PresWitness transport_through(const SymmetryElem& s, PresWitness w) {
    if (s.swap12) std::swap(w.P1, w.P2);
    if (s.swap34) std::swap(w.Q3, w.Q4);
    if (s.transpose) {
        PresWitness t;
        t.P1 = w.Q3.transpose();
        t.P2 = w.Q4.transpose();
        t.Q3 = w.P1.transpose();
        t.Q4 = w.P2.transpose();
        return t;
    }
    return w;
}

/// Given a decomposition of apply_symmetry(s, C), produce one of C.
CoreResult pull_back_symmetry(const SymmetryElem& s, const Presentation& c,
                              const CoreResult& inner) {
    if (s.is_identity()) return inner;
    const FieldSpec& f = c.field;
    Workspace ws(c);
    PresWitness moved = transport_through(s, inner.w);
    ws.apply_p1(moved.P1);
    ws.apply_p2(moved.P2);
    ws.apply_q3(moved.Q3);
    ws.apply_q4(moved.Q4);

    // cur is now the s^{-1}-image of the inner direct sum, summand by
    // summand; fold each summand onto the form of its image class
    SymmetryElem sinv = s.inverse();
    std::vector<Piece> pieces;
    std::array<int, 4> off{0, 0, 0, 0};
    for (const Descriptor& d : inner.descs) {
        auto [img, w] = symmetry_act_witness(sinv, d, f);
        DimVector dm = dim_of(img);
        Piece p;
        p.desc = img;
        for (int st = 0; st < 4; ++st) {
            for (int i = 0; i < dm[st]; ++i) p.idx[st].push_back(off[st] + i);
            off[st] += dm[st];
        }
        ws.apply_p1(embed_diag(f, ws.cur.A.rows(), p.idx[0], w.P1));
        ws.apply_p2(embed_diag(f, ws.cur.B.rows(), p.idx[1], w.P2));
        ws.apply_q3(embed_diag(f, ws.cur.A.cols(), p.idx[2], w.Q3));
        ws.apply_q4(embed_diag(f, ws.cur.G.cols(), p.idx[3], w.Q4));
        pieces.push_back(std::move(p));
    }
    std::vector<Descriptor> sorted = sort_and_pack(ws, pieces);
    verify_layout(ws, sorted);
    return {sorted, ws.wit};
}

// ------------------------------------------------------ similarity case

/// W has equal stripe dimensions and invertible alpha, beta, delta blocks;
/// the remaining gamma block classifies up to similarity.
CoreResult similarity_case(const Presentation& w) {
    const FieldSpec& f = w.field;
    Workspace ws(w);
    ws.apply_q3(inverse(w.A));                // alpha = I
    ws.apply_p2(w.A * inverse(w.B));          // beta = I
    ws.apply_q4(inverse(ws.cur.D));           // delta = I, gamma = G D^-1 B A^-1

    struct Cell {
        Poly p;
        int s = 1;
        bool t_power = false;
        bool exact = true;
    };
    std::vector<Cell> cells;

    auto conj = [&](const Mat& p, const Mat& q) {
        ws.apply_p1(p);
        ws.apply_q3(q);
        ws.apply_p2(p);
        ws.apply_q4(q);
    };
    Mat m = ws.cur.G;
    if (f.is_prime_field()) {
        auto pd = primary_decompose(m);
        conj(pd.w.P, pd.w.Q);
        for (const auto& [p, s] : pd.parts) cells.push_back({p, s, p == Poly::t(f), true});
    } else {
        auto fd = fitting_decompose(m);
        conj(fd.w.P, fd.w.Q);
        auto nil = invariant_factor_decompose(fd.nilpotent);
        auto inv = invariant_factor_decompose(fd.invertible);
        conj(direct_sum_diag({nil.w.P, inv.w.P}, f), direct_sum_diag({nil.w.Q, inv.w.Q}, f));
        for (const Poly& fac : nil.factors) {
            for (int i = 0; i < fac.degree(); ++i)
                if (!fac.coeff(i).is_zero())
                    throw std::logic_error("nilpotent block with a non-power factor");
            cells.push_back({Poly::t(f), fac.degree(), true, true});
        }
        for (const Poly& fac : inv.factors) cells.push_back({fac, 1, false, false});
    }

    // companion cells of t^s carry their ones below the diagonal; flip them
    // to the upper Jordan form with a per-cell reversal
    std::vector<Mat> flip;
    for (const Cell& c : cells) {
        int size = c.p.degree() * c.s;
        flip.push_back(c.t_power ? reversal(f, size) : Mat::identity(f, size));
    }
    Mat flipm = direct_sum_diag(flip, f);
    conj(flipm, flipm);

    std::vector<Descriptor> layout;
    for (const Cell& c : cells) {
        if (c.t_power)
            layout.push_back(Descriptor::plain(DType::TI, c.s));
        else
            layout.push_back(Descriptor::t0(c.p, c.s, c.exact));
    }
    std::vector<Piece> pieces;
    contiguous_pieces(layout, {0, 0, 0, 0}, pieces);
    std::vector<Descriptor> sorted = sort_and_pack(ws, pieces);
    verify_layout(ws, sorted);
    return {sorted, ws.wit};
}

// ------------------------------------------------------- extension case

struct Restoration {
    Descriptor restored;
    bool row_top;   // added row goes above the summand's first-stripe rows
    bool col_left;  // added column goes before the summand's third-stripe columns
};

std::optional<Restoration> coupled_restoration(const Descriptor& d) {
    if (d.type == DType::TI && d.variant == Variant::s12s34)
        return Restoration{Descriptor::plain(DType::TII, d.n), false, false};
    if (d.type == DType::TII && d.variant == Variant::s12s34)
        return Restoration{Descriptor::plain(DType::TI, d.n + 1), false, false};
    if (d.type == DType::TIII && d.variant == Variant::s12)
        return Restoration{Descriptor::plain(DType::TIV, d.n), true, true};
    if (d.type == DType::TIV && d.variant == Variant::s34)
        return Restoration{Descriptor::plain(DType::TIII, d.n + 1), false, false};
    return std::nullopt;
}

/// Left-null functional of a block: row vector l with l B = 0 (absent when
/// B has full row rank). Catalogue forms have corank at most one.
std::optional<Mat> coker_functional(const Mat& b) {
    auto ns = nullspace(b.transpose());
    if (ns.empty()) return std::nullopt;
    if (ns.size() > 1) throw std::logic_error("unexpected corank in a catalogue block");
    return ns[0].transpose();
}

/// Normalizes the first stripe to A = [I_r 0; 0 A'], G = [0; G'] with G' of
/// full row rank; requires rank(G) < d1 and no vertex-1 null summands.
int reduce_first_stripe(Workspace& ws) {
    const FieldSpec& f = ws.cur.field;
    DimVector d = ws.cur.dims();
    RowReduction rg = row_reduce(ws.cur.G);
    int r = d[0] - rg.rank();
    if (r < 1) throw std::invalid_argument("gamma block is already surjective");
    ws.apply_p1(rg.P);
    std::vector<int> order;
    for (int i = rg.rank(); i < d[0]; ++i) order.push_back(i);  // zero rows first
    for (int i = 0; i < rg.rank(); ++i) order.push_back(i);
    ws.apply_p1(perm_rows(f, order));

    Mat a_top = ws.cur.A.submatrix(0, r, 0, d[2]);
    auto sf = standard_form(a_top);
    if (sf.r != r)
        throw std::invalid_argument("presentation has null summands; prune before reducing");
    ws.apply_p1(direct_sum_diag({sf.w.P, Mat::identity(f, d[0] - r)}, f));
    ws.apply_q3(sf.w.Q);

    // use the unit rows to clear the alpha block below them
    Mat x = Mat::identity(f, d[0]);
    for (int i = r; i < d[0]; ++i)
        for (int j = 0; j < r; ++j) x.at(i, j) = -ws.cur.A.at(i, j);
    ws.apply_p1(x);
    return r;
}

CoreResult extension_case(const Presentation& w, int depth, int limit) {
    const FieldSpec& f = w.field;
    DimVector d = w.dims();
    Workspace ws(w);
    int r = reduce_first_stripe(ws);

    Presentation n_part(f, ws.cur.A.submatrix(r, d[0], r, d[2]),
                        ws.cur.B.submatrix(0, d[1], r, d[2]),
                        ws.cur.G.submatrix(r, d[0], 0, d[3]), ws.cur.D);
    CoreResult inner = decompose_core(n_part, depth + 1, limit);

    // carry the inner normalization into the extension frame
    ws.apply_p1(direct_sum_diag({Mat::identity(f, r), inner.w.P1}, f));
    ws.apply_p2(inner.w.P2);
    ws.apply_q3(direct_sum_diag({Mat::identity(f, r), inner.w.Q3}, f));
    ws.apply_q4(inner.w.Q4);

    std::vector<Piece> summands;
    contiguous_pieces(inner.descs, {r, 0, r, 0}, summands);
    const int ns = static_cast<int>(summands.size());

    std::vector<std::optional<Mat>> functional(ns);
    std::vector<Presentation> forms;
    forms.reserve(ns);
    for (int i = 0; i < ns; ++i) {
        forms.push_back(generate(summands[i].desc, f));
        functional[i] = coker_functional(forms[i].B);
        if (functional[i].has_value() != coupled_restoration(summands[i].desc).has_value())
            throw std::logic_error("coupling capacity disagrees with the restoration table");
    }

    auto residue = [&](int unit, int i) -> Scalar {
        if (!functional[i]) return Scalar::zero(f);
        Scalar acc = Scalar::zero(f);
        const Mat& l = *functional[i];
        for (size_t k = 0; k < summands[i].idx[1].size(); ++k)
            acc = acc + l.at(0, static_cast<int>(k)) * ws.cur.B.at(summands[i].idx[1][k], unit);
        return acc;
    };

    // canonical lift of the spare direction: unit vector at the first
    // nonzero coordinate of the functional
    auto spare_vector = [&](int i) -> Mat {
        const Mat& l = *functional[i];
        Mat e(f, l.cols(), 1);
        for (int k = 0; k < l.cols(); ++k)
            if (!l.at(0, k).is_zero()) {
                e.at(k, 0) = l.at(0, k).inv();
                return e;
            }
        throw std::logic_error("zero coker functional");
    };

    // reshape a unit column at one summand to the given target, moving only
    // within the beta column space (plus first-stripe cleanup)
    auto clear_im_part = [&](int unit, int i, const Mat& target) {
        const std::vector<int>& rows2 = summands[i].idx[1];
        Mat part(f, static_cast<int>(rows2.size()), 1);
        for (size_t k = 0; k < rows2.size(); ++k)
            part.at(static_cast<int>(k), 0) =
                ws.cur.B.at(rows2[k], unit) - target.at(static_cast<int>(k), 0);
        if (part.is_zero()) return;
        Mat x;
        if (!solve(forms[i].B, part, x))
            throw std::logic_error("unit coupling is not reducible modulo the beta image");
        Mat y = Mat::identity(f, d[2]);
        for (size_t k = 0; k < summands[i].idx[2].size(); ++k)
            y.at(summands[i].idx[2][k], unit) = -x.at(static_cast<int>(k), 0);
        ws.apply_q3(y);
        Mat fixup = Mat::identity(f, d[0]);
        for (int row = r; row < d[0]; ++row) fixup.at(row, unit) = -ws.cur.A.at(row, unit);
        ws.apply_p1(fixup);
    };

    std::vector<int> claimed_by(ns, -1);  // summand -> unit
    std::vector<int> claim_of(r, -1);     // unit -> summand

    for (int unit = 0; unit < r; ++unit) {
        std::vector<int> touched;
        for (int i = 0; i < ns; ++i) {
            if (claimed_by[i] >= 0) {
                if (!residue(unit, i).is_zero())
                    throw std::logic_error("finished summand touched again");
                continue;
            }
            if (!residue(unit, i).is_zero()) touched.push_back(i);
        }
        if (touched.empty()) continue;

        // pick a summand able to absorb every other touched one
        auto dominates = [&](int i, int j) {
            Mat ei = spare_vector(i);
            for (const Morphism& h : hom_space(forms[i], forms[j])) {
                Mat img = h.L2 * ei;
                Scalar val = Scalar::zero(f);
                for (int k = 0; k < img.rows(); ++k)
                    val = val + functional[j]->at(0, k) * img.at(k, 0);
                if (!val.is_zero()) return true;
            }
            return false;
        };
        int claim = -1;
        for (int i : touched) {
            bool ok = true;
            for (int j : touched)
                if (j != i && !dominates(i, j)) {
                    ok = false;
                    break;
                }
            if (ok) {
                claim = i;
                break;
            }
        }
        if (claim < 0) throw std::logic_error("no summand dominates the coupling of a unit");

        // normalize the residue at the claimed summand to one
        Scalar rho = residue(unit, claim);
        Mat scale_col = Mat::identity(f, d[2]);
        scale_col.at(unit, unit) = rho.inv();
        ws.apply_q3(scale_col);
        Mat scale_row = Mat::identity(f, d[0]);
        scale_row.at(unit, unit) = rho;
        ws.apply_p1(scale_row);

        // shape the claimed part into the exact spare vector
        clear_im_part(unit, claim, spare_vector(claim));

        // detach the other units from the claimed summand by column mixing
        Mat mix_cols = Mat::identity(f, d[2]);
        Mat mix_rows = Mat::identity(f, d[0]);
        bool mixed = false;
        for (int other = 0; other < r; ++other) {
            if (other == unit) continue;
            Scalar rho2 = residue(other, claim);
            if (rho2.is_zero()) continue;
            mix_cols.at(unit, other) = -rho2;
            mix_rows.at(unit, other) = rho2;
            mixed = true;
        }
        if (mixed) {
            ws.apply_q3(mix_cols);
            ws.apply_p1(mix_rows);
        }

        // absorb the unit's residues at the other touched summands with
        // unipotent automorphisms of the inner direct sum
        for (int j : touched) {
            if (j == claim) continue;
            Scalar rho3 = residue(unit, j);
            if (rho3.is_zero()) continue;
            Mat ei = spare_vector(claim);
            auto homs = hom_space(forms[claim], forms[j]);
            const Morphism* pick = nullptr;
            Scalar delta = Scalar::zero(f);
            for (const Morphism& h : homs) {
                Mat img = h.L2 * ei;
                Scalar val = Scalar::zero(f);
                for (int k = 0; k < img.rows(); ++k)
                    val = val + functional[j]->at(0, k) * img.at(k, 0);
                if (!val.is_zero()) {
                    pick = &h;
                    delta = val;
                    break;
                }
            }
            if (!pick) throw std::logic_error("dominance vanished while clearing a unit");
            Scalar lam = -(rho3 / delta);
            ws.apply_p1(
                embed_unipotent(f, d[0], summands[j].idx[0], summands[claim].idx[0], pick->L1, lam));
            ws.apply_p2(
                embed_unipotent(f, d[1], summands[j].idx[1], summands[claim].idx[1], pick->L2, lam));
            ws.apply_q3(embed_unipotent(f, d[2], summands[j].idx[2], summands[claim].idx[2],
                                        pick->L3, -lam));
            ws.apply_q4(embed_unipotent(f, d[3], summands[j].idx[3], summands[claim].idx[3],
                                        pick->L4, -lam));
            if (!residue(unit, j).is_zero())
                throw std::logic_error("unipotent clearing failed");
        }

        claimed_by[claim] = unit;
        claim_of[unit] = claim;
    }

    // flush what remains of the couplings inside the beta column spaces
    for (int unit = 0; unit < r; ++unit)
        for (int i = 0; i < ns; ++i) {
            Mat target(f, static_cast<int>(summands[i].idx[1].size()), 1);
            if (claim_of[unit] == i) target = spare_vector(i);
            clear_im_part(unit, i, target);
        }

    // assemble the final pieces: restored summands absorb their unit's row
    // and column, unclaimed units split off as single-arrow pieces
    std::vector<Piece> pieces;
    for (int i = 0; i < ns; ++i) {
        Piece p = summands[i];
        if (claimed_by[i] >= 0) {
            auto rest = coupled_restoration(p.desc);
            if (!rest) throw std::logic_error("claimed summand has no restoration");
            int unit = claimed_by[i];
            p.desc = rest->restored;
            if (rest->row_top)
                p.idx[0].insert(p.idx[0].begin(), unit);
            else
                p.idx[0].push_back(unit);
            if (rest->col_left)
                p.idx[2].insert(p.idx[2].begin(), unit);
            else
                p.idx[2].push_back(unit);
        }
        pieces.push_back(std::move(p));
    }
    for (int unit = 0; unit < r; ++unit) {
        if (claim_of[unit] >= 0) continue;
        Piece p;
        p.desc = Descriptor::plain(DType::TII, 0);
        p.idx[0] = {unit};
        p.idx[2] = {unit};
        pieces.push_back(std::move(p));
    }
    std::vector<Descriptor> sorted = sort_and_pack(ws, pieces);
    verify_layout(ws, sorted);
    return {sorted, ws.wit};
}

// ------------------------------------------------------------ the driver

struct PruneCounts {
    std::array<int, 4> keep{};
};

PruneCounts prune_workspace(Workspace& ws) {
    PruneCounts pc;
    RowReduction r1 = row_reduce(hstack(ws.cur.A, ws.cur.G));
    ws.apply_p1(r1.P);
    pc.keep[0] = r1.rank();

    RowReduction r2 = row_reduce(hstack(ws.cur.B, ws.cur.D));
    ws.apply_p2(r2.P);
    pc.keep[1] = r2.rank();

    RowReduction r3 = row_reduce(vstack(ws.cur.A, ws.cur.B).transpose());
    ws.apply_q3(r3.P.transpose());
    pc.keep[2] = r3.rank();

    RowReduction r4 = row_reduce(vstack(ws.cur.G, ws.cur.D).transpose());
    ws.apply_q4(r4.P.transpose());
    pc.keep[3] = r4.rank();
    return pc;
}

bool surjective(const Mat& m) { return rank(m) == m.rows(); }

CoreResult decompose_core_pruned(const Presentation& c, int depth, int limit) {
    const FieldSpec& f = c.field;
    DimVector d = c.dims();
    if (d.is_zero()) return {{}, PresWitness::identity(f, d)};

    // similarity path: some orientation leaves alpha, beta, delta invertible
    if (d[0] == d[1] && d[1] == d[2] && d[2] == d[3]) {
        for (const SymmetryElem& s : SymmetryElem::swaps()) {
            Presentation w = apply_symmetry(s, c);
            if (is_invertible(w.A) && is_invertible(w.B) && is_invertible(w.D))
                return pull_back_symmetry(s, c, similarity_case(w));
        }
    }

    // otherwise some operator fails surjectivity (slot order gamma, alpha,
    // delta, beta), possibly only after dualizing
    const std::array<SymmetryElem, 4> slot_order{SymmetryElem::identity(), SymmetryElem::s34(),
                                                 SymmetryElem::s12(), SymmetryElem::s12s34()};
    for (const SymmetryElem& s : slot_order) {
        Presentation w = apply_symmetry(s, c);
        if (!surjective(w.G)) return pull_back_symmetry(s, c, extension_case(w, depth, limit));
    }
    for (const SymmetryElem& swap : slot_order) {
        SymmetryElem s = compose(swap, SymmetryElem::tr());
        Presentation w = apply_symmetry(s, c);
        if (!surjective(w.G)) return pull_back_symmetry(s, c, extension_case(w, depth, limit));
    }
    throw std::logic_error("no reduction applies to a pruned presentation");
}

CoreResult decompose_core(const Presentation& v, int depth, int limit) {
    const FieldSpec& f = v.field;
    DimVector d = v.dims();
    if (depth > limit) throw std::logic_error("decomposition recursion exceeded its bound");
    if (d.is_zero()) return {{}, PresWitness::identity(f, d)};

    Workspace ws(v);
    PruneCounts pc = prune_workspace(ws);

    Presentation core(f, ws.cur.A.submatrix(0, pc.keep[0], 0, pc.keep[2]),
                      ws.cur.B.submatrix(0, pc.keep[1], 0, pc.keep[2]),
                      ws.cur.G.submatrix(0, pc.keep[0], 0, pc.keep[3]),
                      ws.cur.D.submatrix(0, pc.keep[1], 0, pc.keep[3]));
    CoreResult inner = decompose_core_pruned(core, depth, limit);

    ws.apply_p1(direct_sum_diag({inner.w.P1, Mat::identity(f, d[0] - pc.keep[0])}, f));
    ws.apply_p2(direct_sum_diag({inner.w.P2, Mat::identity(f, d[1] - pc.keep[1])}, f));
    ws.apply_q3(direct_sum_diag({inner.w.Q3, Mat::identity(f, d[2] - pc.keep[2])}, f));
    ws.apply_q4(direct_sum_diag({inner.w.Q4, Mat::identity(f, d[3] - pc.keep[3])}, f));

    std::vector<Piece> pieces;
    contiguous_pieces(inner.descs, {0, 0, 0, 0}, pieces);
    for (int i = pc.keep[0]; i < d[0]; ++i) {
        Piece p;
        p.desc = Descriptor::plain(DType::TIII, 0);
        p.idx[0] = {i};
        pieces.push_back(std::move(p));
    }
    for (int i = pc.keep[1]; i < d[1]; ++i) {
        Piece p;
        p.desc = Descriptor::plain(DType::TIII, 0, Variant::s12);
        p.idx[1] = {i};
        pieces.push_back(std::move(p));
    }
    for (int i = pc.keep[2]; i < d[2]; ++i) {
        Piece p;
        p.desc = Descriptor::plain(DType::TIVs, 0, Variant::s34);
        p.idx[2] = {i};
        pieces.push_back(std::move(p));
    }
    for (int i = pc.keep[3]; i < d[3]; ++i) {
        Piece p;
        p.desc = Descriptor::plain(DType::TIVs, 0);
        p.idx[3] = {i};
        pieces.push_back(std::move(p));
    }
    std::vector<Descriptor> sorted = sort_and_pack(ws, pieces);
    verify_layout(ws, sorted);
    return {sorted, ws.wit};
}

}  // namespace

// ----------------------------------------------------------- public API

std::vector<Descriptor> Decomposition::expanded() const {
    std::vector<Descriptor> out;
    for (const DecompPart& p : parts)
        for (int i = 0; i < p.count; ++i) out.push_back(p.desc);
    return out;
}

std::string Decomposition::to_string() const {
    std::ostringstream os;
    os << "dims " << total.to_string();
    for (const DecompPart& p : parts) os << "\n  " << p.desc.to_string() << " x" << p.count;
    return os.str();
}

bool decomposition_eq(const Decomposition& a, const Decomposition& b) {
    if (a.total != b.total || a.parts.size() != b.parts.size()) return false;
    for (size_t i = 0; i < a.parts.size(); ++i)
        if (a.parts[i].count != b.parts[i].count ||
            !descriptor_eq(a.parts[i].desc, b.parts[i].desc))
            return false;
    return true;
}

Presentation assemble(const std::vector<Descriptor>& descs, const FieldSpec& f) {
    Presentation acc = Presentation::zero(f, {0, 0, 0, 0});
    for (const Descriptor& d : descs) acc = direct_sum(acc, generate(d, f));
    return acc;
}

PruneResult prune_trivial(const Presentation& v) {
    v.validate();
    Workspace ws(v);
    PruneCounts pc = prune_workspace(ws);
    DimVector d = v.dims();
    PruneResult r;
    r.core = Presentation(v.field, ws.cur.A.submatrix(0, pc.keep[0], 0, pc.keep[2]),
                          ws.cur.B.submatrix(0, pc.keep[1], 0, pc.keep[2]),
                          ws.cur.G.submatrix(0, pc.keep[0], 0, pc.keep[3]),
                          ws.cur.D.submatrix(0, pc.keep[1], 0, pc.keep[3]));
    for (int i = pc.keep[0]; i < d[0]; ++i) r.simples.push_back(Descriptor::plain(DType::TIII, 0));
    for (int i = pc.keep[1]; i < d[1]; ++i)
        r.simples.push_back(Descriptor::plain(DType::TIII, 0, Variant::s12));
    for (int i = pc.keep[2]; i < d[2]; ++i)
        r.simples.push_back(Descriptor::plain(DType::TIVs, 0, Variant::s34));
    for (int i = pc.keep[3]; i < d[3]; ++i) r.simples.push_back(Descriptor::plain(DType::TIVs, 0));
    std::sort(r.simples.begin(), r.simples.end(), descriptor_less);
    return r;
}

std::pair<Presentation, ReductionStep> prop1_reduce(const Presentation& v) {
    v.validate();
    DimVector d = v.dims();
    if (rank(v.G) >= d[0])
        throw std::invalid_argument("the gamma block must have a proper image");
    const FieldSpec& f = v.field;
    Workspace ws(v);
    int r = reduce_first_stripe(ws);

    // standard form of the remaining beta columns exposes the unit block
    Mat m21 = ws.cur.B.submatrix(0, d[1], r, d[2]);
    auto sf2 = standard_form(m21);
    int m = sf2.r;
    ws.apply_p2(sf2.w.P);
    ws.apply_q3(direct_sum_diag({Mat::identity(f, r), sf2.w.Q}, f));
    // clear the top rows of the left beta columns against the unit block
    Mat y = Mat::identity(f, d[2]);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < r; ++j) y.at(r + i, j) = -ws.cur.B.at(i, j);
    ws.apply_q3(y);
    Mat fixup = Mat::identity(f, d[0]);
    for (int row = r; row < d[0]; ++row)
        for (int j = 0; j < r; ++j) fixup.at(row, j) = -ws.cur.A.at(row, j);
    ws.apply_p1(fixup);

    // standard form of the lower-left block; its rank counts the columns
    // that stay coupled
    Mat l2 = ws.cur.B.submatrix(m, d[1], 0, r);
    auto sf3 = standard_form(l2);
    int s = sf3.r;
    ws.apply_p2(direct_sum_diag({Mat::identity(f, m), sf3.w.P}, f));
    ws.apply_q3(direct_sum_diag({sf3.w.Q, Mat::identity(f, d[2] - r)}, f));
    // the column operations dented the unit block; row operations on the
    // unit rows alone restore it
    Mat a_top = ws.cur.A.submatrix(0, r, 0, r);
    ws.apply_p1(direct_sum_diag({inverse(a_top), Mat::identity(f, d[0] - r)}, f));

    ReductionStep step;
    step.r = r;
    step.sigma = SymmetryElem::identity();
    step.coupling.assign(r, -1);
    for (int j = 0; j < s; ++j) step.coupling[j] = m + j;

    Presentation vp(f, ws.cur.A.submatrix(r, d[0], r, d[2]),
                    ws.cur.B.submatrix(0, d[1], r, d[2]),
                    ws.cur.G.submatrix(r, d[0], 0, d[3]), ws.cur.D);
    return {vp, step};
}

Decomposition decompose(const Presentation& v, bool with_witness) {
    v.validate();
    CoreResult core = decompose_core(v, 0, v.dims().total() + 2);

    if (core.w.apply(v) != assemble(core.descs, v.field))
        throw std::logic_error("decomposition witness check failed");

    Decomposition out;
    out.total = v.dims();
    for (const Descriptor& d : core.descs) {
        if (!d.primary_exact) out.exact = false;
        if (!out.parts.empty() && descriptor_eq(out.parts.back().desc, d))
            ++out.parts.back().count;
        else
            out.parts.push_back({d, 1});
    }
    if (with_witness) out.witness = core.w;
    return out;
}

bool is_isomorphic(const Presentation& v, const Presentation& w) {
    if (v.field != w.field) throw std::invalid_argument("isomorphism test field mismatch");
    if (v.dims() != w.dims()) return false;
    return decomposition_eq(decompose(v, false), decompose(w, false));
}

OracleVerdict indecomposable_oracle(const Presentation& v, long long budget) {
    if (!v.field.is_prime_field())
        throw std::invalid_argument("the enumeration oracle needs a prime field");

    auto basis = hom_space(v, v);
    int k = static_cast<int>(basis.size());
    const std::int64_t p = v.field.p;
    long long count = 1;
    for (int i = 0; i < k; ++i) {
        if (count > budget / p) return OracleVerdict::unknown;
        count *= p;
    }

    // flatten morphisms and precompute structure constants of composition
    DimVector dv = v.dims();
    int m = dv[0] * dv[0] + dv[1] * dv[1] + dv[2] * dv[2] + dv[3] * dv[3];
    auto flatten = [&](const Morphism& mo) {
        Mat vec(v.field, m, 1);
        int off = 0;
        for (const Mat* L : {&mo.L1, &mo.L2, &mo.L3, &mo.L4})
            for (int i = 0; i < L->rows(); ++i)
                for (int j = 0; j < L->cols(); ++j) vec.at(off++, 0) = L->at(i, j);
        return vec;
    };
    Mat bmat(v.field, m, k);
    for (int c = 0; c < k; ++c) {
        Mat col = flatten(basis[c]);
        for (int i = 0; i < m; ++i) bmat.at(i, c) = col.at(i, 0);
    }
    RowReduction rr = row_reduce(bmat);
    auto coords = [&](const Mat& vec) {
        Mat pb = rr.P * vec;
        for (int i = rr.rank(); i < m; ++i)
            if (!pb.at(i, 0).is_zero()) throw std::logic_error("composition left the algebra");
        std::vector<std::int64_t> x(static_cast<size_t>(k), 0);
        for (int i = 0; i < rr.rank(); ++i) x[rr.pivot_cols[i]] = pb.at(i, 0).residue();
        return x;
    };

    std::vector<std::vector<std::vector<std::int64_t>>> sc(
        k, std::vector<std::vector<std::int64_t>>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sc[i][j] = coords(flatten(compose(basis[i], basis[j])));
    std::vector<std::int64_t> id = coords(flatten(identity_morphism(v)));

    std::vector<std::int64_t> a(static_cast<size_t>(k), 0);
    std::vector<std::int64_t> square(static_cast<size_t>(k), 0);
    while (true) {
        int pos = 0;
        while (pos < k && ++a[pos] == p) a[pos++] = 0;
        if (pos == k) break;

        std::fill(square.begin(), square.end(), 0);
        for (int i = 0; i < k; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < k; ++j) {
                if (a[j] == 0) continue;
                std::int64_t wgt = (a[i] * a[j]) % p;
                const auto& row = sc[i][j];
                for (int l = 0; l < k; ++l) square[l] += wgt * row[l];
            }
        }
        bool idem = true;
        for (int l = 0; l < k && idem; ++l) idem = (square[l] % p) == a[l];
        if (!idem) continue;
        if (a == id) continue;
        return OracleVerdict::no;  // a nontrivial idempotent splits v
    }
    return OracleVerdict::yes;
}

}  // namespace qrep
