#include "smith.hpp"

namespace dgc {

namespace {

using Dense = std::vector<std::vector<Int>>;

Dense dense_identity(int n) {
    Dense m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

SparseMatrix to_sparse(const Dense& d, int rows, int cols) {
    SparseMatrix m(rows, cols, RingTag::integers());
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (d[i][j] != 0) m.set(i, j, d[i][j]);
    return m;
}

// Quotient minimizing |a - q*b|; ties toward the smaller quotient.
Int nearest_quotient(const Int& a, const Int& b) {
    Int q = a / b;  // truncated
    Int best = q, bestrem;
    mpz_abs(bestrem.get_mpz_t(), Int(a - q * b).get_mpz_t());
    for (int d = -1; d <= 1; d += 2) {
        Int cand = q + d, rem;
        mpz_abs(rem.get_mpz_t(), Int(a - cand * b).get_mpz_t());
        if (rem < bestrem || (rem == bestrem && cand < best)) {
            best = cand;
            bestrem = rem;
        }
    }
    return best;
}

struct SnfWork {
    int rows, cols;
    Dense s, l, linv, r, rinv;

    explicit SnfWork(const SparseMatrix& a)
        : rows(a.rows),
          cols(a.cols),
          s(a.rows, std::vector<Int>(a.cols, 0)),
          l(dense_identity(a.rows)),
          linv(dense_identity(a.rows)),
          r(dense_identity(a.cols)),
          rinv(dense_identity(a.cols)) {
        for (const auto& [rc, val] : a.entries) s[rc.first][rc.second] = val;
    }

    void row_axpy(int i, int t, const Int& q) {  // row_i -= q * row_t
        for (int j = 0; j < cols; ++j) s[i][j] -= q * s[t][j];
        for (int j = 0; j < rows; ++j) l[i][j] -= q * l[t][j];
        for (int j = 0; j < rows; ++j) linv[j][t] += q * linv[j][i];
    }
    void col_axpy(int j, int t, const Int& q) {  // col_j -= q * col_t
        for (int i = 0; i < rows; ++i) s[i][j] -= q * s[i][t];
        for (int i = 0; i < cols; ++i) r[i][j] -= q * r[i][t];
        for (int i = 0; i < cols; ++i) rinv[t][i] += q * rinv[j][i];
    }
    void row_swap(int i, int t) {
        std::swap(s[i], s[t]);
        std::swap(l[i], l[t]);
        for (int j = 0; j < rows; ++j) std::swap(linv[j][i], linv[j][t]);
    }
    void col_swap(int j, int t) {
        for (int i = 0; i < rows; ++i) std::swap(s[i][j], s[i][t]);
        for (int i = 0; i < cols; ++i) std::swap(r[i][j], r[i][t]);
        std::swap(rinv[j], rinv[t]);
    }
    void row_negate(int t) {
        for (int j = 0; j < cols; ++j) s[t][j] = -s[t][j];
        for (int j = 0; j < rows; ++j) l[t][j] = -l[t][j];
        for (int j = 0; j < rows; ++j) linv[j][t] = -linv[j][t];
    }
};

}  // namespace

SparseMatrix SmithForm::diagonal_matrix(int rows, int cols) const {
    SparseMatrix m(rows, cols, RingTag::integers());
    for (int i = 0; i < static_cast<int>(diag.size()); ++i)
        if (diag[i] != 0) m.set(i, i, diag[i]);
    return m;
}

SmithForm smith_normal_form(const SparseMatrix& a) {
    require(a.ring.is_integers(), errc::input,
            "smith_normal_form requires Integer coefficients, got " + a.ring.to_string());
    SnfWork w(a);
    int n = std::min(a.rows, a.cols);

    for (int t = 0; t < n; ++t) {
        // pivot: smallest absolute value in the remaining block, lex ties
        int pi = -1, pj = -1;
        Int pabs;
        for (int i = t; i < w.rows; ++i)
            for (int j = t; j < w.cols; ++j) {
                if (w.s[i][j] == 0) continue;
                Int ab;
                mpz_abs(ab.get_mpz_t(), w.s[i][j].get_mpz_t());
                if (pi < 0 || ab < pabs) {
                    pi = i;
                    pj = j;
                    pabs = ab;
                }
            }
        if (pi < 0) break;
        if (pi != t) w.row_swap(pi, t);
        if (pj != t) w.col_swap(pj, t);

        while (true) {
            bool dirty = false;
            for (int i = t + 1; i < w.rows; ++i) {
                if (w.s[i][t] == 0) continue;
                Int q = nearest_quotient(w.s[i][t], w.s[t][t]);
                w.row_axpy(i, t, q);
                if (w.s[i][t] != 0) {  // remainder strictly smaller: promote it
                    w.row_swap(i, t);
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (int j = t + 1; j < w.cols; ++j) {
                if (w.s[t][j] == 0) continue;
                Int q = nearest_quotient(w.s[t][j], w.s[t][t]);
                w.col_axpy(j, t, q);
                if (w.s[t][j] != 0) {
                    w.col_swap(j, t);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // divisibility sweep: pivot must divide the rest of the block
            bool fixed = false;
            for (int i = t + 1; i < w.rows && !fixed; ++i)
                for (int j = t + 1; j < w.cols && !fixed; ++j) {
                    if (w.s[i][j] == 0) continue;
                    if (!mpz_divisible_p(w.s[i][j].get_mpz_t(), w.s[t][t].get_mpz_t())) {
                        w.row_axpy(t, i, Int(-1));  // row_t += row_i
                        fixed = true;
                    }
                }
            if (!fixed) break;
        }
        if (w.s[t][t] < 0) w.row_negate(t);
    }

    SmithForm out;
    out.diag.resize(n);
    for (int t = 0; t < n; ++t) out.diag[t] = w.s[t][t];
    out.left = to_sparse(w.l, a.rows, a.rows);
    out.left_inv = to_sparse(w.linv, a.rows, a.rows);
    out.right = to_sparse(w.r, a.cols, a.cols);
    out.right_inv = to_sparse(w.rinv, a.cols, a.cols);

    // exact replay: left * a * right must equal the diagonal
    SparseMatrix check = out.left.times(a).times(out.right);
    require(check == out.diagonal_matrix(a.rows, a.cols), errc::invariant,
            "smith_normal_form transform replay failed");
    for (int t = 0; t + 1 < n; ++t)
        require(out.diag[t + 1] == 0 || (out.diag[t] != 0 &&
                    mpz_divisible_p(out.diag[t + 1].get_mpz_t(), out.diag[t].get_mpz_t())),
                errc::invariant, "smith_normal_form divisibility chain failed");
    return out;
}

SolveResult solve_integer(const SparseMatrix& a, const Vec& b) {
    require(a.ring.is_integers(), errc::input, "solve_integer requires Integer coefficients");
    SmithForm snf = smith_normal_form(a);
    Vec w = snf.left.apply(b);
    int n = static_cast<int>(snf.diag.size());
    SolveResult res;
    Vec y(a.cols, 0);
    Vec rho(a.rows, 0);  // residues in SNF coordinates
    bool ok = true;
    for (int i = 0; i < a.rows; ++i) {
        Int d = i < n ? snf.diag[i] : Int(0);
        if (d != 0) {
            Int q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), w[i].get_mpz_t(), d.get_mpz_t());
            y[i] = q;
            rho[i] = r;
            if (r != 0) ok = false;
        } else {
            rho[i] = w[i];
            if (w[i] != 0) ok = false;
        }
    }
    if (ok) {
        res.solvable = true;
        res.solution = snf.right.apply(y);
        return res;
    }
    res.solvable = false;
    res.snf_residues.assign(rho.begin(), rho.end());
    res.obstruction = snf.left_inv.apply(rho);
    return res;
}

IntegralCohomology integral_cohomology(const SparseMatrix& d_in, const SparseMatrix& d_out) {
    require(d_in.ring.is_integers() && d_out.ring.is_integers(), errc::input,
            "integral_cohomology requires Integer coefficients");
    require(d_out.cols == d_in.rows, errc::input, "dimension mismatch in integral_cohomology");
    SparseMatrix comp = d_out.times(d_in);
    if (!comp.is_zero()) {
        auto [rc, val] = *comp.entries.begin();
        throw error(errc::invariant,
                    "complex inconsistency: (d_out*d_in)[" + std::to_string(rc.first) + "][" +
                        std::to_string(rc.second) + "] = " + val.get_str());
    }

    IntegralCohomology out;
    out.ambient = d_in.rows;

    // kernel lattice of d_out
    SmithForm so = smith_normal_form(d_out);
    std::vector<Vec> kcols;
    for (int j = 0; j < d_out.cols; ++j) {
        Int d = j < static_cast<int>(so.diag.size()) ? so.diag[j] : Int(0);
        if (d == 0) kcols.push_back(so.right.column(j));
    }
    int k = static_cast<int>(kcols.size());
    out.kernel_matrix = SparseMatrix::from_columns(out.ambient, kcols, RingTag::integers());
    if (k == 0) return out;

    // express the image of d_in in kernel coordinates
    SmithForm sk = smith_normal_form(out.kernel_matrix);
    SparseMatrix x(k, d_in.cols, RingTag::integers());
    for (int j = 0; j < d_in.cols; ++j) {
        Vec wv = sk.left.apply(d_in.column(j));
        Vec z(out.kernel_matrix.cols, 0);
        for (int i = 0; i < out.ambient; ++i) {
            Int d = i < static_cast<int>(sk.diag.size()) ? sk.diag[i] : Int(0);
            if (d != 0) {
                require(mpz_divisible_p(wv[i].get_mpz_t(), d.get_mpz_t()), errc::invariant,
                        "image does not lie in the kernel lattice");
                z[i] = wv[i] / d;
            } else {
                require(wv[i] == 0, errc::invariant, "image does not lie in the kernel lattice");
            }
        }
        Vec y = sk.right.apply(z);
        for (int i = 0; i < k; ++i)
            if (y[i] != 0) x.set(i, j, y[i]);
    }

    SmithForm sx = smith_normal_form(x);
    out.lx = sx.left;
    SparseMatrix kprime = out.kernel_matrix.times(sx.left_inv);
    out.diag_full.assign(k, 0);
    for (int j = 0; j < k; ++j)
        out.diag_full[j] = j < static_cast<int>(sx.diag.size()) ? sx.diag[j] : Int(0);

    for (int j = 0; j < k; ++j) {
        const Int& s = out.diag_full[j];
        if (s == 1) continue;
        if (s == 0) {
            out.free_reps.push_back(kprime.column(j));
        } else {
            out.torsion_orders.push_back(s);
            out.torsion_reps.push_back(kprime.column(j));
            out.bounding.push_back(sx.right.column(j));
        }
    }
    out.free_rank = static_cast<int>(out.free_reps.size());
    return out;
}

Int IntegralCohomology::class_order(const Vec& z) const {
    require(static_cast<int>(z.size()) == ambient, errc::input, "class_order: dimension mismatch");
    if (kernel_matrix.cols == 0) {
        require(vec_is_zero(z), errc::input, "class_order: vector is not a cocycle");
        return 1;
    }
    SolveResult sr = solve_integer(kernel_matrix, z);
    require(sr.solvable, errc::input, "class_order: vector is not a cocycle");
    Vec y = lx.apply(sr.solution);
    Int order = 1;
    for (int j = 0; j < static_cast<int>(y.size()); ++j) {
        const Int& s = diag_full[j];
        if (s == 1) continue;
        if (s == 0) {
            if (y[j] != 0) return 0;  // infinite order
        } else {
            Int g, yj = y[j] % s;
            if (yj < 0) yj += s;
            if (yj == 0) continue;
            mpz_gcd(g.get_mpz_t(), yj.get_mpz_t(), s.get_mpz_t());
            Int part = s / g;
            mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), part.get_mpz_t());
        }
    }
    return order;
}

}  // namespace dgc
