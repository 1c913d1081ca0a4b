#include "dga.hpp"

namespace dgc {

namespace {

int sign_pow(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace

void DGAlgebra::finalize() {
    offsets.assign(top_degree() + 1, 0);
    total_dim = 0;
    for (int n = 0; n <= top_degree(); ++n) {
        offsets[n] = total_dim;
        total_dim += dim(n);
    }
    if (diffs.size() < basis.names.size()) diffs.resize(basis.names.size());
    for (int n = 0; n <= top_degree(); ++n) {
        if (diffs[n].rows == 0 && diffs[n].cols == 0 && diffs[n].entries.empty())
            diffs[n] = SparseMatrix(n + 1 <= top_degree() ? dim(n + 1) : 0, dim(n), ring);
        require(diffs[n].cols == dim(n), errc::input, "differential source shape mismatch");
        require(diffs[n].rows == (n + 1 <= top_degree() ? dim(n + 1) : 0), errc::input,
                "differential target shape mismatch");
        require(diffs[n].ring == ring, errc::input, "differential ring mismatch");
    }
    require(static_cast<int>(unit.size()) == dim(0), errc::input, "unit must live in degree 0");
    require(static_cast<int>(augment.size()) == dim(0), errc::input,
            "augmentation is a degree-0 functional");
    auto normalize_table = [&](std::map<std::pair<int, int>, SparseElem>& t) {
        for (auto it = t.begin(); it != t.end();) {
            SparseElem clean;
            for (const auto& [g, c] : it->second) {
                Int v = ring.normalize(c);
                if (v != 0) clean[g] = v;
            }
            if (clean.empty()) {
                it = t.erase(it);
            } else {
                it->second = std::move(clean);
                ++it;
            }
        }
    };
    normalize_table(product_table);
    normalize_table(cup1_table);
    for (auto& x : unit) x = ring.normalize(x);
    for (auto& x : augment) x = ring.normalize(x);
}

std::pair<int, int> DGAlgebra::local(int g) const {
    require(g >= 0 && g < total_dim, errc::input, "basis index out of range");
    int deg = 0;
    while (deg + 1 <= top_degree() && offsets[deg + 1] <= g) ++deg;
    return {deg, g - offsets[deg]};
}

const std::string& DGAlgebra::name_of(int g) const {
    auto [deg, ord] = local(g);
    return basis.names[deg][ord];
}

Elem DGAlgebra::basis_elem(int g) const {
    auto [deg, ord] = local(g);
    Elem e = zero_elem(deg);
    e.coeffs[ord] = 1;
    return e;
}

Elem DGAlgebra::from_sparse(int degree, const SparseElem& s) const {
    Elem e = zero_elem(degree);
    for (const auto& [g, c] : s) {
        auto [deg, ord] = local(g);
        require(deg == degree, errc::input, "sparse element crosses degrees");
        e.coeffs[ord] = ring.add(e.coeffs[ord], c);
    }
    return e;
}

Elem DGAlgebra::add(const Elem& a, const Elem& b) const {
    require(a.degree == b.degree, errc::input, "degree mismatch in add");
    Elem out = a;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] = ring.add(out.coeffs[i], b.coeffs[i]);
    return out;
}

Elem DGAlgebra::scale(const Int& c, const Elem& a) const {
    Elem out = a;
    for (auto& x : out.coeffs) x = ring.mul(c, x);
    return out;
}

Elem DGAlgebra::mul(const Elem& a, const Elem& b) const {
    Elem out = zero_elem(a.degree + b.degree);
    if (out.degree > top_degree()) return out;
    for (int i = 0; i < dim(a.degree); ++i) {
        if (a.coeffs[i] == 0) continue;
        int ga = global(a.degree, i);
        for (int j = 0; j < dim(b.degree); ++j) {
            if (b.coeffs[j] == 0) continue;
            auto it = product_table.find({ga, global(b.degree, j)});
            if (it == product_table.end()) continue;
            Int c = ring.mul(a.coeffs[i], b.coeffs[j]);
            for (const auto& [g, v] : it->second) {
                auto [deg, ord] = local(g);
                require(deg == out.degree, errc::invariant, "product table breaks grading");
                out.coeffs[ord] = ring.add(out.coeffs[ord], ring.mul(c, v));
            }
        }
    }
    return out;
}

Elem DGAlgebra::cup1(const Elem& a, const Elem& b) const {
    require(has_cup1, errc::input, "algebra '" + label + "' carries no cup-one table");
    int deg = a.degree + b.degree - 1;
    Elem out = zero_elem(deg);  // empty coefficient list outside [0, top]
    if (deg < 0 || deg > top_degree()) return out;
    for (int i = 0; i < dim(a.degree); ++i) {
        if (a.coeffs[i] == 0) continue;
        int ga = global(a.degree, i);
        for (int j = 0; j < dim(b.degree); ++j) {
            if (b.coeffs[j] == 0) continue;
            auto it = cup1_table.find({ga, global(b.degree, j)});
            if (it == cup1_table.end()) continue;
            Int c = ring.mul(a.coeffs[i], b.coeffs[j]);
            for (const auto& [g, v] : it->second) {
                auto [dg, ord] = local(g);
                require(dg == deg, errc::invariant, "cup-one table breaks grading");
                out.coeffs[ord] = ring.add(out.coeffs[ord], ring.mul(c, v));
            }
        }
    }
    return out;
}

Elem DGAlgebra::apply_d(const Elem& a) const {
    if (a.degree >= top_degree() || a.degree < 0) return zero_elem(a.degree + 1);
    return Elem{a.degree + 1, diffs[a.degree].apply(a.coeffs)};
}

Int DGAlgebra::aug(const Elem& a) const {
    if (a.degree != 0) return 0;
    Int s = 0;
    for (int i = 0; i < dim(0); ++i) s += augment[i] * a.coeffs[i];
    return ring.normalize(s);
}

CochainComplex DGAlgebra::complex() const {
    CochainComplex c;
    c.ring = ring;
    c.dims.resize(top_degree() + 1);
    for (int n = 0; n <= top_degree(); ++n) c.dims[n] = dim(n);
    c.d = diffs;
    c.validate_shapes();
    return c;
}

bool DGAlgebra::is_connected() const {
    if (dim(0) != 1) return false;
    return aug(unit_elem()) == 1 && unit[0] != 0;
}

bool DGAlgebra::is_one_reduced() const { return dim(1) == 0; }

bool DGAlgebra::graded_commutative() const {
    for (int ga = 0; ga < total_dim; ++ga)
        for (int gb = 0; gb < total_dim; ++gb) {
            Elem ab = mul(basis_elem(ga), basis_elem(gb));
            Elem ba = mul(basis_elem(gb), basis_elem(ga));
            int s = sign_pow(degree_of(ga) * degree_of(gb));
            if (!(ab == scale(s, ba))) return false;
        }
    return true;
}

void DGAlgebra::check_invariants() const {
    complex().check_d_squared();

    for (int ga = 0; ga < total_dim; ++ga)
        for (int gb = 0; gb < total_dim; ++gb) {
            Elem a = basis_elem(ga), b = basis_elem(gb);
            Elem lhs = apply_d(mul(a, b));
            Elem rhs = add(mul(apply_d(a), b), scale(sign_pow(a.degree), mul(a, apply_d(b))));
            require(lhs == rhs, errc::invariant,
                    "Leibniz fails on (" + name_of(ga) + ", " + name_of(gb) + ")");
        }

    for (int ga = 0; ga < total_dim; ++ga)
        for (int gb = 0; gb < total_dim; ++gb)
            for (int gc = 0; gc < total_dim; ++gc) {
                if (degree_of(ga) + degree_of(gb) + degree_of(gc) > top_degree()) continue;
                Elem a = basis_elem(ga), b = basis_elem(gb), c = basis_elem(gc);
                require(mul(mul(a, b), c) == mul(a, mul(b, c)), errc::invariant,
                        "associativity fails on (" + name_of(ga) + ", " + name_of(gb) + ", " +
                            name_of(gc) + ")");
            }

    for (int g = 0; g < total_dim; ++g) {
        Elem x = basis_elem(g);
        require(mul(unit_elem(), x) == x, errc::invariant, "left unit fails on " + name_of(g));
        require(mul(x, unit_elem()) == x, errc::invariant, "right unit fails on " + name_of(g));
    }

    require(aug(unit_elem()) == 1, errc::invariant, "augmentation of the unit is not 1");
    for (int i = 0; i < dim(0); ++i)
        for (int j = 0; j < dim(0); ++j) {
            Elem x = basis_elem(global(0, i)), y = basis_elem(global(0, j));
            require(aug(mul(x, y)) == ring.mul(aug(x), aug(y)), errc::invariant,
                    "augmentation is not multiplicative");
        }

    if (has_cup1) {
        for (int ga = 0; ga < total_dim; ++ga)
            for (int gb = 0; gb < total_dim; ++gb) {
                if (degree_of(ga) == 0 || degree_of(gb) == 0) {
                    require(cup1_table.find({ga, gb}) == cup1_table.end(), errc::invariant,
                            "cup-one must vanish in degree 0");
                    continue;
                }
                Elem res = cup1_coboundary_residual(*this, ga, gb);
                require(res.zero(), errc::invariant, "cup-one coboundary identity fails on (" +
                                                         name_of(ga) + ", " + name_of(gb) + ")");
            }
        for (int ga = 0; ga < total_dim; ++ga)
            for (int gb = 0; gb < total_dim; ++gb)
                for (int gc = 0; gc < total_dim; ++gc) {
                    if (degree_of(ga) + degree_of(gb) + degree_of(gc) - 1 > top_degree()) continue;
                    Elem res = hirsch_residual(*this, ga, gb, gc);
                    require(res.zero(), errc::invariant,
                            "Hirsch identity fails on (" + name_of(ga) + ", " + name_of(gb) +
                                ", " + name_of(gc) + ")");
                }
    }
}

DGAlgebra DGAlgebra::base_change(RingTag target) const {
    require(ring.is_integers(), errc::input, "base_change starts from an integral algebra");
    require(!target.is_integers(), errc::input, "base_change target must be F_p or Z/p^eps");
    DGAlgebra out = *this;
    out.ring = target;
    for (auto& m : out.diffs) m = m.reduced(target);
    out.integral_parent = std::make_shared<DGAlgebra>(*this);
    out.reduction_kind = target.is_field() ? "red_p" : "red_p^eps";
    out.label = label + " mod " + target.to_string();
    out.finalize();
    return out;
}

Elem cup1_coboundary_residual(const DGAlgebra& A, int ga, int gb) {
    Elem a = A.basis_elem(ga), b = A.basis_elem(gb);
    int da = a.degree, db = b.degree;
    Elem res = A.apply_d(A.cup1(a, b));
    res = A.add(res, A.scale(-1, A.mul(a, b)));
    res = A.add(res, A.scale(sign_pow(da * db), A.mul(b, a)));
    res = A.add(res, A.cup1(A.apply_d(a), b));
    res = A.add(res, A.scale(sign_pow(da), A.cup1(a, A.apply_d(b))));
    return res;
}

Elem hirsch_residual(const DGAlgebra& A, int ga, int gb, int gc) {
    Elem a = A.basis_elem(ga), b = A.basis_elem(gb), c = A.basis_elem(gc);
    Elem res = A.cup1(A.mul(a, b), c);
    res = A.add(res, A.scale(-sign_pow(a.degree), A.mul(a, A.cup1(b, c))));
    res = A.add(res, A.scale(-sign_pow(b.degree * c.degree), A.mul(A.cup1(a, c), b)));
    return res;
}

DGAlgebra tensor_dga(const DGAlgebra& A, const DGAlgebra& B) {
    require(A.ring == B.ring, errc::input, "tensor_dga: ring mismatch");
    DGAlgebra T;
    T.ring = A.ring;
    T.label = "tensor(" + A.label + "," + B.label + ")";

    int top = A.top_degree() + B.top_degree();
    // (gA, gB) -> (degree, ordinal) in T; fill degree by degree
    std::map<std::pair<int, int>, std::pair<int, int>> pos;
    std::vector<std::vector<std::pair<int, int>>> per_degree(top + 1);
    for (int ga = 0; ga < A.total_dim; ++ga)
        for (int gb = 0; gb < B.total_dim; ++gb)
            per_degree[A.degree_of(ga) + B.degree_of(gb)].push_back({ga, gb});
    for (int n = 0; n <= top; ++n)
        for (auto& pr : per_degree[n]) {
            int ord = T.basis.add(n, A.name_of(pr.first) + "&" + B.name_of(pr.second));
            pos[pr] = {n, ord};
        }

    // d(x&y) = dx&y + (-1)^{|x|} x&dy
    T.diffs.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        int target = n + 1 <= top ? static_cast<int>(per_degree[n + 1].size()) : 0;
        SparseMatrix m(target, static_cast<int>(per_degree[n].size()), T.ring);
        for (int j = 0; j < static_cast<int>(per_degree[n].size()); ++j) {
            auto [ga, gb] = per_degree[n][j];
            int dega = A.degree_of(ga), degb = B.degree_of(gb);
            Elem dx = A.apply_d(A.basis_elem(ga));
            for (int i = 0; i < static_cast<int>(dx.coeffs.size()); ++i) {
                if (dx.coeffs[i] == 0) continue;
                auto [dn, ord] = pos.at({A.global(dega + 1, i), gb});
                (void)dn;
                m.add_to(ord, j, dx.coeffs[i]);
            }
            Elem dy = B.apply_d(B.basis_elem(gb));
            for (int i = 0; i < static_cast<int>(dy.coeffs.size()); ++i) {
                if (dy.coeffs[i] == 0) continue;
                auto [dn, ord] = pos.at({ga, B.global(degb + 1, i)});
                (void)dn;
                m.add_to(ord, j, Int(sign_pow(dega)) * dy.coeffs[i]);
            }
        }
        T.diffs[n] = std::move(m);
    }

    // unit, augmentation
    int dim0 = static_cast<int>(per_degree[0].size());
    T.unit.assign(dim0, 0);
    T.augment.assign(dim0, 0);
    for (int j = 0; j < dim0; ++j) {
        auto [ga, gb] = per_degree[0][j];
        auto [da, oa] = A.local(ga);
        auto [db, ob] = B.local(gb);
        (void)da;
        (void)db;
        T.unit[j] = T.ring.mul(A.unit[oa], B.unit[ob]);
        T.augment[j] = T.ring.mul(A.augment[oa], B.augment[ob]);
    }

    T.finalize();
    auto tglobal = [&](int ga, int gb) {
        auto [n, ord] = pos.at({ga, gb});
        return T.global(n, ord);
    };

    // (x1&y1)(x2&y2) = (-1)^{|y1||x2|} (x1x2)&(y1y2)
    for (int ga1 = 0; ga1 < A.total_dim; ++ga1)
        for (int gb1 = 0; gb1 < B.total_dim; ++gb1)
            for (int ga2 = 0; ga2 < A.total_dim; ++ga2)
                for (int gb2 = 0; gb2 < B.total_dim; ++gb2) {
                    Elem xa = A.mul(A.basis_elem(ga1), A.basis_elem(ga2));
                    if (xa.zero()) continue;
                    Elem yb = B.mul(B.basis_elem(gb1), B.basis_elem(gb2));
                    if (yb.zero()) continue;
                    int s = sign_pow(B.degree_of(gb1) * A.degree_of(ga2));
                    SparseElem val;
                    for (int i = 0; i < static_cast<int>(xa.coeffs.size()); ++i) {
                        if (xa.coeffs[i] == 0) continue;
                        for (int j = 0; j < static_cast<int>(yb.coeffs.size()); ++j) {
                            if (yb.coeffs[j] == 0) continue;
                            int g = tglobal(A.global(xa.degree, i), B.global(yb.degree, j));
                            val[g] = T.ring.add(val[g],
                                                T.ring.mul(Int(s) * xa.coeffs[i], yb.coeffs[j]));
                        }
                    }
                    if (!val.empty())
                        T.product_table[{tglobal(ga1, gb1), tglobal(ga2, gb2)}] = std::move(val);
                }
    T.finalize();
    return T;
}

/* ---- DG coalgebra ---- */

void DGCoalgebra::finalize() {
    offsets.assign(top_degree() + 1, 0);
    total_dim = 0;
    for (int n = 0; n <= top_degree(); ++n) {
        offsets[n] = total_dim;
        total_dim += dim(n);
    }
    if (diffs.size() < basis.names.size()) diffs.resize(basis.names.size());
    for (int n = 0; n <= top_degree(); ++n) {
        if (diffs[n].rows == 0 && diffs[n].cols == 0 && diffs[n].entries.empty())
            diffs[n] = SparseMatrix(n + 1 <= top_degree() ? dim(n + 1) : 0, dim(n), ring);
        require(diffs[n].cols == dim(n) &&
                    diffs[n].rows == (n + 1 <= top_degree() ? dim(n + 1) : 0),
                errc::input, "coalgebra differential shape mismatch");
    }
    require(static_cast<int>(counit.size()) == dim(0), errc::input,
            "counit is a degree-0 functional");
    require(static_cast<int>(coaug.size()) == dim(0), errc::input,
            "coaugmentation is a degree-0 element");
}

std::pair<int, int> DGCoalgebra::local(int g) const {
    require(g >= 0 && g < total_dim, errc::input, "coalgebra index out of range");
    int deg = 0;
    while (deg + 1 <= top_degree() && offsets[deg + 1] <= g) ++deg;
    return {deg, g - offsets[deg]};
}

bool DGCoalgebra::differential_is_zero() const {
    for (const auto& m : diffs)
        if (!m.is_zero()) return false;
    return true;
}

std::vector<std::tuple<int, int, Int>> DGCoalgebra::reduced_coproduct(int g) const {
    std::vector<std::tuple<int, int, Int>> out;
    auto it = coproduct.find(g);
    if (it == coproduct.end()) return out;
    for (const auto& [g1, g2, c] : it->second) {
        if (local(g1).first == 0 || local(g2).first == 0) continue;  // trivial parts
        out.push_back({g1, g2, c});
    }
    return out;
}

void DGCoalgebra::check_invariants() const {
    // d^2 = 0
    for (int n = 0; n + 1 <= top_degree(); ++n) {
        SparseMatrix sq = diffs[n + 1].times(diffs[n]);
        require(sq.is_zero(), errc::invariant,
                "coalgebra d^2 != 0 in degree " + std::to_string(n));
    }

    auto cop = [&](int g) {
        auto it = coproduct.find(g);
        static const std::vector<std::tuple<int, int, Int>> none;
        return it == coproduct.end() ? none : it->second;
    };

    // coassociativity: (Delta x 1) Delta == (1 x Delta) Delta
    for (int g = 0; g < total_dim; ++g) {
        std::map<std::tuple<int, int, int>, Int> lhs, rhs;
        for (const auto& [g1, g2, c] : cop(g)) {
            for (const auto& [h1, h2, e] : cop(g1)) {
                Int& v = lhs[{h1, h2, g2}];
                v = ring.normalize(v + c * e);
            }
            for (const auto& [h1, h2, e] : cop(g2)) {
                Int& v = rhs[{g1, h1, h2}];
                v = ring.normalize(v + c * e);
            }
        }
        auto clean = [](std::map<std::tuple<int, int, int>, Int>& m) {
            for (auto it = m.begin(); it != m.end();)
                it = it->second == 0 ? m.erase(it) : std::next(it);
        };
        clean(lhs);
        clean(rhs);
        require(lhs == rhs, errc::invariant, "coassociativity fails on basis index " +
                                                 std::to_string(g));
    }

    // counit laws: (eps x 1) Delta = id = (1 x eps) Delta
    for (int g = 0; g < total_dim; ++g) {
        SparseElem left, right;
        for (const auto& [g1, g2, c] : cop(g)) {
            auto [d1, o1] = local(g1);
            auto [d2, o2] = local(g2);
            if (d1 == 0) {
                Int& v = left[g2];
                v = ring.normalize(v + c * counit[o1]);
            }
            if (d2 == 0) {
                Int& v = right[g1];
                v = ring.normalize(v + c * counit[o2]);
            }
        }
        auto is_delta = [&](SparseElem& s) {
            for (auto it = s.begin(); it != s.end();)
                it = it->second == 0 ? s.erase(it) : std::next(it);
            return s.size() == 1 && s.begin()->first == g && s.begin()->second == 1;
        };
        require(is_delta(left) && is_delta(right), errc::invariant,
                "counit law fails on basis index " + std::to_string(g));
    }

    // co-Leibniz: Delta(dx) = (d x 1 + 1 x d) Delta(x); only meaningful where
    // the stored differential is not cut off by a truncation
    int coleibniz_bound = diff_complete_below < 0 ? top_degree() + 1 : diff_complete_below;
    for (int g = 0; g < total_dim; ++g) {
        auto [deg, ord] = local(g);
        if (deg >= coleibniz_bound) continue;
        std::map<std::pair<int, int>, Int> lhs, rhs;
        if (deg + 1 <= top_degree()) {
            Vec unitv(dim(deg), 0);
            unitv[ord] = 1;
            Vec dx = diffs[deg].apply(unitv);
            for (int i = 0; i < static_cast<int>(dx.size()); ++i) {
                if (dx[i] == 0) continue;
                for (const auto& [g1, g2, c] : cop(global(deg + 1, i))) {
                    Int& v = lhs[{g1, g2}];
                    v = ring.normalize(v + dx[i] * c);
                }
            }
        }
        for (const auto& [g1, g2, c] : cop(g)) {
            auto [d1, o1] = local(g1);
            auto [d2, o2] = local(g2);
            if (d1 + 1 <= top_degree()) {
                Vec u(dim(d1), 0);
                u[o1] = 1;
                Vec d1x = diffs[d1].apply(u);
                for (int i = 0; i < static_cast<int>(d1x.size()); ++i)
                    if (d1x[i] != 0) {
                        Int& v = rhs[{global(d1 + 1, i), g2}];
                        v = ring.normalize(v + c * d1x[i]);
                    }
            }
            if (d2 + 1 <= top_degree()) {
                Vec u(dim(d2), 0);
                u[o2] = 1;
                Vec d2x = diffs[d2].apply(u);
                int s = sign_pow(d1);
                for (int i = 0; i < static_cast<int>(d2x.size()); ++i)
                    if (d2x[i] != 0) {
                        Int& v = rhs[{g1, global(d2 + 1, i)}];
                        v = ring.normalize(v + Int(s) * c * d2x[i]);
                    }
            }
        }
        auto clean = [](std::map<std::pair<int, int>, Int>& m) {
            for (auto it = m.begin(); it != m.end();)
                it = it->second == 0 ? m.erase(it) : std::next(it);
        };
        clean(lhs);
        clean(rhs);
        require(lhs == rhs, errc::invariant,
                "co-Leibniz fails on basis index " + std::to_string(g));
    }

    // degree-wise conilpotence witness: iterating the reduced coproduct on a
    // basis element dies within its degree bound
    for (int g = 0; g < total_dim; ++g) {
        auto [deg, ord] = local(g);
        (void)ord;
        if (deg == 0) continue;
        std::map<std::vector<int>, Int> words{{{g}, Int(1)}};
        for (int step = 0; step <= deg + 1 && !words.empty(); ++step) {
            std::map<std::vector<int>, Int> next;
            for (const auto& [w, c] : words)
                for (std::size_t pos = 0; pos < w.size(); ++pos)
                    for (const auto& [g1, g2, e] : reduced_coproduct(w[pos])) {
                        std::vector<int> nw(w.begin(), w.begin() + pos);
                        nw.push_back(g1);
                        nw.push_back(g2);
                        nw.insert(nw.end(), w.begin() + pos + 1, w.end());
                        Int& v = next[nw];
                        v = ring.normalize(v + c * e);
                    }
            for (auto it = next.begin(); it != next.end();)
                it = it->second == 0 ? next.erase(it) : std::next(it);
            words = std::move(next);
        }
        require(words.empty(), errc::invariant,
                "conilpotence witness failed on basis index " + std::to_string(g));
    }
}

DGCoalgebra dual_coalgebra(const DGAlgebra& A) {
    require(A.complex().ring == A.ring, errc::input, "bad algebra");
    for (const auto& m : A.diffs)
        require(m.is_zero(), errc::input,
                "dual_coalgebra expects a zero-differential (formal) algebra");
    DGCoalgebra C;
    C.ring = A.ring;
    C.label = "dual(" + A.label + ")";
    C.basis = A.basis;  // dual basis, same names
    C.diffs.clear();
    // coproduct dual to the product: Delta(phi_k) = sum coeff(x_i x_j, x_k) phi_i x phi_j
    for (const auto& [pair, val] : A.product_table) {
        for (const auto& [gk, c] : val) {
            C.coproduct[gk].push_back({pair.first, pair.second, c});
        }
    }
    // merge duplicates deterministically
    for (auto& [g, terms] : C.coproduct) {
        std::map<std::pair<int, int>, Int> acc;
        for (const auto& [g1, g2, c] : terms) {
            Int& v = acc[{g1, g2}];
            v = C.ring.normalize(v + c);
        }
        terms.clear();
        for (const auto& [gg, c] : acc)
            if (c != 0) terms.push_back({gg.first, gg.second, c});
    }
    // counit dual to the unit; coaugmentation dual to the augmentation
    C.counit = A.unit;
    C.coaug = A.augment;
    C.finalize();
    return C;
}

}  // namespace dgc
