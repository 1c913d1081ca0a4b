#include "sparse.hpp"
#include "smith.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace dgc {

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

SparseMatrix SparseMatrix::identity(int n, RingTag rg) {
    SparseMatrix m(n, n, rg);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

SparseMatrix SparseMatrix::from_columns(int rows, const std::vector<Vec>& cols, RingTag rg) {
    SparseMatrix m(rows, static_cast<int>(cols.size()), rg);
    for (int j = 0; j < m.cols; ++j) {
        require(static_cast<int>(cols[j].size()) == rows, errc::input, "column length mismatch");
        for (int i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
    }
    return m;
}

void SparseMatrix::set(int r, int c, const Int& v) {
    require(r >= 0 && r < rows && c >= 0 && c < cols, errc::input, "matrix index out of range");
    Int n = ring.normalize(v);
    if (n == 0)
        entries.erase({r, c});
    else
        entries[{r, c}] = n;
}

void SparseMatrix::add_to(int r, int c, const Int& v) { set(r, c, get(r, c) + v); }

Int SparseMatrix::get(int r, int c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? Int(0) : it->second;
}

Vec SparseMatrix::column(int j) const {
    Vec v(rows, 0);
    for (const auto& [rc, val] : entries)
        if (rc.second == j) v[rc.first] = val;
    return v;
}

Vec SparseMatrix::apply(const Vec& x) const {
    require(static_cast<int>(x.size()) == cols, errc::input, "dimension mismatch in apply");
    Vec y(rows, 0);
    for (const auto& [rc, val] : entries)
        if (x[rc.second] != 0) y[rc.first] += val * x[rc.second];
    for (auto& v : y) v = ring.normalize(v);
    return y;
}

Vec SparseMatrix::apply_transpose(const Vec& x) const {
    require(static_cast<int>(x.size()) == rows, errc::input, "dimension mismatch in apply_transpose");
    Vec y(cols, 0);
    for (const auto& [rc, val] : entries)
        if (x[rc.first] != 0) y[rc.second] += val * x[rc.first];
    for (auto& v : y) v = ring.normalize(v);
    return y;
}

SparseMatrix SparseMatrix::times(const SparseMatrix& o) const {
    require(cols == o.rows, errc::input, "dimension mismatch in times");
    require(ring == o.ring, errc::input, "ring mismatch in times");
    std::vector<std::vector<std::pair<int, Int>>> bycol(cols);
    for (const auto& [rc, val] : entries) bycol[rc.second].push_back({rc.first, val});
    std::map<std::pair<int, int>, Int> acc;
    for (const auto& [rc, val] : o.entries)
        for (const auto& [i, v2] : bycol[rc.first]) acc[{i, rc.second}] += v2 * val;
    SparseMatrix out(rows, o.cols, ring);
    for (const auto& [rc, val] : acc) out.set(rc.first, rc.second, val);
    return out;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix out(cols, rows, ring);
    for (const auto& [rc, val] : entries) out.set(rc.second, rc.first, val);
    return out;
}

SparseMatrix SparseMatrix::scaled(const Int& c) const {
    SparseMatrix out(rows, cols, ring);
    for (const auto& [rc, val] : entries) out.set(rc.first, rc.second, val * c);
    return out;
}

SparseMatrix SparseMatrix::plus(const SparseMatrix& o) const {
    require(rows == o.rows && cols == o.cols, errc::input, "dimension mismatch in plus");
    SparseMatrix out = *this;
    for (const auto& [rc, val] : o.entries) out.add_to(rc.first, rc.second, val);
    return out;
}

SparseMatrix SparseMatrix::reduced(RingTag target) const {
    SparseMatrix out(rows, cols, target);
    for (const auto& [rc, val] : entries) out.set(rc.first, rc.second, val);
    return out;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
    return rows == o.rows && cols == o.cols && entries == o.entries;
}

/* ---- field elimination ----
   Elimination runs on machine words whenever the modulus fits (it always does
   for the primes this engine sees); results are converted back to exact Ints.
   Pivot choice is the lowest available row index, so all bases are
   reproducible run to run. */

namespace {

int lowest_nonzero(const Vec& v) {
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (v[i] != 0) return i;
    return -1;
}

using W = long long;

struct FpOps {
    W mod;
    W norm(W a) const {
        a %= mod;
        return a < 0 ? a + mod : a;
    }
    W mul(W a, W b) const { return (static_cast<__int128>(a) * b) % mod; }
    W inv(W a) const {
        W t = 0, nt = 1, r = mod, nr = norm(a);
        while (nr != 0) {
            W q = r / nr;
            std::swap(t -= q * nt, nt);
            std::swap(r -= q * nr, nr);
        }
        return norm(t);
    }
};

struct FpElim {
    // pivot row -> (reduced column, combination of original columns)
    std::map<int, std::pair<std::vector<W>, std::vector<W>>> pivots;
    std::vector<std::vector<W>> kernel;
    FpOps op;
    int rows = 0, cols = 0;

    void run(const SparseMatrix& m) {
        op.mod = m.ring.modulus().get_si();
        rows = m.rows;
        cols = m.cols;
        std::vector<std::vector<W>> colv(m.cols, std::vector<W>(m.rows, 0));
        for (const auto& [rc, val] : m.entries)
            colv[rc.second][rc.first] = op.norm(val.get_si() % op.mod);
        for (int j = 0; j < m.cols; ++j) {
            std::vector<W> v = std::move(colv[j]);
            std::vector<W> t(m.cols, 0);
            t[j] = 1;
            reduce_tracked(v, t);
            int r = first_nonzero(v);
            if (r < 0) {
                kernel.push_back(std::move(t));
            } else {
                W s = op.inv(v[r]);
                for (auto& x : v) x = op.mul(x, s);
                for (auto& x : t) x = op.mul(x, s);
                pivots[r] = {std::move(v), std::move(t)};
            }
        }
    }

    static int first_nonzero(const std::vector<W>& v) {
        for (int i = 0; i < static_cast<int>(v.size()); ++i)
            if (v[i] != 0) return i;
        return -1;
    }

    void reduce_tracked(std::vector<W>& v, std::vector<W>& t) const {
        for (const auto& [r, pvt] : pivots) {
            if (v[r] == 0) continue;
            W c = v[r];
            const auto& pv = pvt.first;
            const auto& pt = pvt.second;
            for (int i = r; i < rows; ++i)
                if (pv[i] != 0) v[i] = op.norm(v[i] - op.mul(c, pv[i]));
            for (int i = 0; i < cols; ++i)
                if (pt[i] != 0) t[i] = op.norm(t[i] - op.mul(c, pt[i]));
        }
    }

    // Reduce a plain vector, optionally accumulating the combination used.
    void reduce_plain(std::vector<W>& v, std::vector<W>* comb) const {
        for (const auto& [r, pvt] : pivots) {
            if (v[r] == 0) continue;
            W c = v[r];
            const auto& pv = pvt.first;
            for (int i = r; i < rows; ++i)
                if (pv[i] != 0) v[i] = op.norm(v[i] - op.mul(c, pv[i]));
            if (comb)
                for (int i = 0; i < cols; ++i)
                    if (pvt.second[i] != 0)
                        (*comb)[i] = op.norm((*comb)[i] + op.mul(c, pvt.second[i]));
        }
    }
};

Vec to_vec(const std::vector<W>& v) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<long>(v[i]);
    return out;
}

std::vector<W> to_words(const Vec& v, const FpOps& op) {
    std::vector<W> out(v.size());
    Int m(static_cast<long>(op.mod));
    for (std::size_t i = 0; i < v.size(); ++i) {
        Int r = v[i] % m;
        out[i] = op.norm(r.get_si());
    }
    return out;
}

}  // namespace

Vec ColumnEchelon::reduce(Vec v) const {
    for (const auto& [r, col] : pivots_) {
        if (v[r] == 0) continue;
        Int c = v[r];  // col[r] == 1
        for (int i = 0; i < static_cast<int>(v.size()); ++i)
            if (col[i] != 0) v[i] = ring_.sub(v[i], ring_.mul(c, col[i]));
    }
    return v;
}

bool ColumnEchelon::insert(Vec v) {
    v = reduce(std::move(v));
    int r = lowest_nonzero(v);
    if (r < 0) return false;
    auto inv = ring_.inverse(v[r]);
    require(inv.has_value(), errc::input, "ColumnEchelon requires field coefficients");
    for (auto& x : v) x = ring_.mul(x, *inv);
    pivots_[r] = std::move(v);
    return true;
}

RankKernelImage rank_kernel_image(const SparseMatrix& m) {
    require(m.ring.is_field(), errc::input,
            "rank_kernel_image requires PrimeField coefficients, got " + m.ring.to_string());
    RankKernelImage out;
    FpElim e;
    e.run(m);
    out.rank = static_cast<int>(e.pivots.size());
    for (auto& k : e.kernel) out.kernel.push_back(to_vec(k));
    for (const auto& [r, vt] : e.pivots) out.image.push_back(to_vec(vt.first));
    return out;
}

namespace {

SolveResult solve_field(const SparseMatrix& m, const Vec& b) {
    SolveResult res;
    FpElim e;
    e.run(m);
    std::vector<W> v = to_words(b, e.op);
    std::vector<W> comb(m.cols, 0);
    e.reduce_plain(v, &comb);
    if (FpElim::first_nonzero(v) < 0) {
        res.solvable = true;
        res.solution = to_vec(comb);
        return res;
    }
    res.solvable = false;
    res.obstruction = to_vec(v);
    // A functional vanishing on im(m) and pairing nonzero with b: reduce the
    // rows of m, then pick a left-kernel vector not orthogonal to b.
    auto left = rank_kernel_image(m.transpose());
    for (const auto& f : left.kernel) {
        Int s = 0;
        for (int i = 0; i < m.rows; ++i) s += f[i] * b[i];
        if (m.ring.normalize(s) != 0) {
            res.functional = f;
            break;
        }
    }
    return res;
}

SolveResult solve_cyclic(const SparseMatrix& m, const Vec& b) {
    // Lift to Z and absorb the modulus into extra columns.
    RingTag z = RingTag::integers();
    SparseMatrix big(m.rows, m.cols + m.rows, z);
    for (const auto& [rc, val] : m.entries) big.set(rc.first, rc.second, val);
    Int mod = m.ring.modulus();
    for (int i = 0; i < m.rows; ++i) big.set(i, m.cols + i, mod);
    Vec bz(b.begin(), b.end());
    SolveResult inner = solve_integer(big, bz);
    SolveResult res;
    if (inner.solvable) {
        res.solvable = true;
        res.solution.assign(m.cols, 0);
        for (int j = 0; j < m.cols; ++j) res.solution[j] = m.ring.normalize(inner.solution[j]);
    } else {
        res.solvable = false;
        res.obstruction = inner.obstruction;
        for (auto& x : res.obstruction) x = m.ring.normalize(x);
        res.snf_residues = inner.snf_residues;
    }
    return res;
}

}  // namespace

SolveResult solve(const SparseMatrix& m, const Vec& b) {
    require(static_cast<int>(b.size()) == m.rows, errc::input, "dimension mismatch in solve");
    switch (m.ring.kind) {
        case RingTag::Kind::prime_field: return solve_field(m, b);
        case RingTag::Kind::integers: return solve_integer(m, b);
        case RingTag::Kind::cyclic: return solve_cyclic(m, b);
    }
    throw error(errc::input, "unknown ring");
}

SubquotientBasis homology(const SparseMatrix& d_in, const SparseMatrix& d_out) {
    require(d_in.ring == d_out.ring, errc::input, "ring mismatch in homology");
    require(d_out.cols == d_in.rows, errc::input, "dimension mismatch in homology");
    SparseMatrix comp = d_out.times(d_in);
    if (!comp.is_zero()) {
        auto [rc, val] = *comp.entries.begin();
        throw error(errc::invariant,
                    "complex inconsistency: (d_out*d_in)[" + std::to_string(rc.first) + "][" +
                        std::to_string(rc.second) + "] = " + val.get_str());
    }
    require(d_in.ring.is_field(), errc::input, "homology requires PrimeField coefficients");

    SubquotientBasis out;
    out.ambient = d_in.rows;
    FpElim eo;
    eo.run(d_out);
    FpElim ei;
    ei.run(d_in);

    FpOps op{eo.op.mod};
    // Echelon of the boundary space, then sweep cycles through it.
    std::map<int, std::vector<W>> ech;
    auto sweep = [&](std::vector<W> v) {
        for (const auto& [r, col] : ech) {
            if (v[r] == 0) continue;
            W c = v[r];
            for (int i = r; i < static_cast<int>(v.size()); ++i)
                if (col[i] != 0) v[i] = op.norm(v[i] - op.mul(c, col[i]));
        }
        return v;
    };
    auto insert = [&](std::vector<W> v) {
        v = sweep(std::move(v));
        int r = FpElim::first_nonzero(v);
        if (r < 0) return false;
        W s = op.inv(v[r]);
        for (auto& x : v) x = op.mul(x, s);
        ech[r] = std::move(v);
        return true;
    };
    for (const auto& [r, vt] : ei.pivots) {
        out.boundaries.push_back(to_vec(vt.first));
        insert(vt.first);
    }
    for (const auto& k : eo.kernel) {
        out.cycles.push_back(to_vec(k));
        std::vector<W> res = sweep(k);
        if (FpElim::first_nonzero(res) >= 0) {
            insert(res);
            out.representatives.push_back(to_vec(k));
        }
    }
    return out;
}

/* ---- text interchange ---- */

void write_matrix(std::ostream& os, const SparseMatrix& m) {
    os << m.rows << " " << m.cols << " " << m.ring.to_string() << "\n";
    for (const auto& [rc, val] : m.entries)
        os << rc.first << " " << rc.second << " " << val.get_str() << "\n";
}

SparseMatrix read_matrix(std::istream& is) {
    std::string header;
    require(static_cast<bool>(std::getline(is, header)), errc::input, "matrix file: missing header");
    std::istringstream hs(header);
    int rows, cols;
    std::string ringstr;
    require(static_cast<bool>(hs >> rows >> cols >> ringstr), errc::input,
            "matrix file: bad header '" + header + "'");
    SparseMatrix m(rows, cols, RingTag::parse(ringstr));
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int r, c;
        std::string v;
        require(static_cast<bool>(ls >> r >> c >> v), errc::input,
                "matrix file: bad entry line '" + line + "'");
        m.add_to(r, c, Int(v));
    }
    return m;
}

}  // namespace dgc
