#include "simplicial.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

namespace dgc {

namespace {

std::string simplex_name(const std::vector<int>& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ".";
        out += std::to_string(s[i]);
    }
    return out + "]";
}

int sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::vector<int>> facets,
                                                 std::string label) {
    SimplicialComplex k;
    k.label = std::move(label);
    for (auto& f : facets) {
        require(!f.empty(), errc::input, "empty facet");
        for (std::size_t i = 0; i + 1 < f.size(); ++i)
            require(f[i] < f[i + 1], errc::input,
                    "facet vertices must be strictly ascending: " + simplex_name(f));
        require(f[0] >= 0, errc::input, "vertex ids must be nonnegative");
    }
    k.facets = std::move(facets);

    std::set<std::vector<int>> closure;
    // expand all nonempty subsets of each facet
    for (const auto& f : k.facets) {
        int n = static_cast<int>(f.size());
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) s.push_back(f[i]);
            closure.insert(std::move(s));
        }
    }
    int topdim = 0;
    for (const auto& s : closure) topdim = std::max(topdim, static_cast<int>(s.size()) - 1);
    k.simplices.assign(topdim + 1, {});
    for (const auto& s : closure) k.simplices[s.size() - 1].push_back(s);
    for (auto& level : k.simplices) std::sort(level.begin(), level.end());
    return k;
}

SimplicialComplex SimplicialComplex::parse(std::istream& is, std::string label) {
    std::vector<std::vector<int>> facets;
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<int> f;
        int v;
        while (ls >> v) f.push_back(v);
        if (!f.empty()) facets.push_back(std::move(f));
    }
    require(!facets.empty(), errc::input, "simplicial file has no facets");
    return from_facets(std::move(facets), std::move(label));
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (int d = 0; d <= dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * count(d);
    return chi;
}

SimplicialComplex SimplicialComplex::suspension() const {
    int fresh = 0;
    for (const auto& f : facets) fresh = std::max(fresh, f.back() + 1);
    std::vector<std::vector<int>> out;
    for (const auto& f : facets)
        for (int apex : {fresh, fresh + 1}) {
            std::vector<int> g = f;
            g.push_back(apex);
            out.push_back(std::move(g));
        }
    return from_facets(std::move(out), "susp(" + label + ")");
}

int SimplicialComplex::find(const std::vector<int>& simplex) const {
    int d = static_cast<int>(simplex.size()) - 1;
    if (d < 0 || d > dimension()) return -1;
    auto it = std::lower_bound(simplices[d].begin(), simplices[d].end(), simplex);
    if (it == simplices[d].end() || *it != simplex) return -1;
    return static_cast<int>(it - simplices[d].begin());
}

SimplicialComplex builtin_complex(const std::string& name) {
    if (name.rfind("boundary_delta(", 0) == 0 && name.back() == ')') {
        int k = std::stoi(name.substr(15, name.size() - 16));
        require(k >= 1 && k <= 12, errc::input, "boundary_delta(k) needs 1 <= k <= 12");
        std::vector<std::vector<int>> facets;
        // all k-subsets of {0..k}
        for (int skip = 0; skip <= k; ++skip) {
            std::vector<int> f;
            for (int v = 0; v <= k; ++v)
                if (v != skip) f.push_back(v);
            facets.push_back(std::move(f));
        }
        return SimplicialComplex::from_facets(std::move(facets), name);
    }
    if (name == "circle") return builtin_complex("boundary_delta(2)");
    if (name == "rp2") {
        return SimplicialComplex::from_facets(
            {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
             {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}},
            "rp2");
    }
    if (name == "moore(2,2)") {
        SimplicialComplex s = builtin_complex("rp2").suspension();
        s.label = "moore(2,2)";
        return s;
    }
    throw error(errc::input, "unknown builtin complex '" + name + "'");
}

DGAlgebra cochain_algebra(const SimplicialComplex& k, RingTag ring) {
    DGAlgebra A;
    A.ring = ring;
    A.label = "cochains(" + k.label + ")";
    int topdim = k.dimension();
    for (int d = 0; d <= topdim; ++d)
        for (const auto& s : k.simplices[d]) A.basis.add(d, simplex_name(s));

    // coboundary: d(s*) = sum over cofaces tau with s = tau minus vertex at
    // position i, sign (-1)^i
    A.diffs.resize(topdim + 1);
    for (int d = 0; d <= topdim; ++d) {
        SparseMatrix m(d + 1 <= topdim ? k.count(d + 1) : 0, k.count(d), ring);
        if (d + 1 <= topdim) {
            for (int t = 0; t < k.count(d + 1); ++t) {
                const auto& tau = k.simplices[d + 1][t];
                for (int i = 0; i <= d + 1; ++i) {
                    std::vector<int> face;
                    for (int j = 0; j <= d + 1; ++j)
                        if (j != i) face.push_back(tau[j]);
                    int s = k.find(face);
                    if (s >= 0) m.add_to(t, s, sign_pow(i));
                }
            }
        }
        A.diffs[d] = std::move(m);
    }

    // unit = sum of vertex duals; augmentation = evaluation at the basepoint
    // (lowest vertex); multiplicative since vertex duals are orthogonal
    // idempotents in degree 0
    A.unit.assign(k.count(0), 1);
    A.augment.assign(k.count(0), 0);
    if (k.count(0) > 0) A.augment[0] = 1;

    A.finalize();

    // cup product: (u v)(rho) = u(front) v(back)
    for (int drho = 0; drho <= topdim; ++drho)
        for (int t = 0; t < k.count(drho); ++t) {
            const auto& rho = k.simplices[drho][t];
            for (int p = 0; p <= drho; ++p) {
                int q = drho - p;
                std::vector<int> front(rho.begin(), rho.begin() + p + 1);
                std::vector<int> back(rho.begin() + p, rho.end());
                int gf = A.global(p, k.find(front));
                int gb = A.global(q, k.find(back));
                SparseElem& cell = A.product_table[{gf, gb}];
                Int& v = cell[A.global(drho, t)];
                v = ring.add(v, 1);
            }
        }

    // Steenrod cup-one: intervals [0..i] + [i+q..n] for the first argument,
    // [i..i+q] for the second; sign (-1)^{(i+1)(q+1)+pq}
    A.has_cup1 = true;
    for (int n = 1; n <= topdim; ++n)
        for (int t = 0; t < k.count(n); ++t) {
            const auto& rho = k.simplices[n][t];
            for (int q = 1; q <= n; ++q) {
                int p = n + 1 - q;  // p + q - 1 == n
                if (p < 1) continue;
                for (int i = 0; i + q <= n; ++i) {
                    std::vector<int> first(rho.begin(), rho.begin() + i + 1);
                    first.insert(first.end(), rho.begin() + i + q, rho.end());
                    std::vector<int> mid(rho.begin() + i, rho.begin() + i + q + 1);
                    int fu = k.find(first);
                    int fv = k.find(mid);
                    if (fu < 0 || fv < 0) continue;
                    int sgn = sign_pow((i + 1) * (q + 1) + p * q);
                    SparseElem& cell = A.cup1_table[{A.global(p, fu), A.global(q, fv)}];
                    Int& v = cell[A.global(n, t)];
                    v = ring.add(v, sgn);
                }
            }
        }

    A.finalize();
    return A;
}

/* ---- formal presets ---- */

namespace {

void fill_unit_products(DGAlgebra& A, int unit_global) {
    for (int g = 0; g < A.total_dim; ++g) {
        A.product_table[{unit_global, g}][g] = 1;
        if (g != unit_global) A.product_table[{g, unit_global}][g] = 1;
    }
}

DGAlgebra square_zero_model(const std::string& label,
                            const std::vector<std::pair<std::string, int>>& generators,
                            bool with_trivial_cup1) {
    DGAlgebra A;
    A.ring = RingTag::integers();
    A.label = label;
    A.basis.add(0, "1");
    for (const auto& [name, deg] : generators) {
        require(deg >= 2, errc::input, "preset generators need degree >= 2");
        A.basis.add(deg, name);
    }
    A.unit = {1};
    A.augment = {1};
    A.finalize();
    fill_unit_products(A, 0);
    A.has_cup1 = with_trivial_cup1;
    A.finalize();
    return A;
}

std::vector<std::string> split_args(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

DGAlgebra preset(const std::string& spec) {
    std::string s = strip(spec);
    auto open = s.find('(');
    require(open != std::string::npos && s.back() == ')', errc::input,
            "bad preset syntax '" + spec + "'");
    std::string head = s.substr(0, open);
    std::vector<std::string> args = split_args(s.substr(open + 1, s.size() - open - 2));

    auto arg_int = [&](int i) {
        try {
            return std::stoi(strip(args.at(i)));
        } catch (const std::exception&) {
            throw error(errc::input, "bad preset argument in '" + spec + "'");
        }
    };

    if (head == "sphere" || head == "exterior") {
        require(args.size() == 1, errc::input, head + " takes one argument");
        int n = arg_int(0);
        require(n >= 2, errc::input, head + "(n) needs n >= 2");
        return square_zero_model(head + "(" + std::to_string(n) + ")",
                                 {{"x" + std::to_string(n), n}}, true);
    }
    if (head == "wedge_of_spheres") {
        require(!args.empty(), errc::input, "wedge_of_spheres takes degrees");
        std::vector<std::pair<std::string, int>> gens;
        for (std::size_t i = 0; i < args.size(); ++i) {
            int n = arg_int(static_cast<int>(i));
            require(n >= 2, errc::input, "wedge degrees need n >= 2");
            gens.push_back({"x" + std::to_string(n) + "_" + std::to_string(i), n});
        }
        return square_zero_model(s, gens, true);
    }
    if (head == "moore") {
        require(args.size() == 2, errc::input, "moore takes (p, n)");
        int p = arg_int(0), n = arg_int(1);
        require(is_prime(p), errc::input, "moore(p, n) needs p prime");
        require(n >= 2, errc::input, "moore(p, n) needs n >= 2");
        DGAlgebra A = square_zero_model(
            "moore(" + std::to_string(p) + "," + std::to_string(n) + ")",
            {{"u" + std::to_string(n), n}, {"v" + std::to_string(n + 1), n + 1}}, true);
        SparseMatrix d(1, 1, A.ring);
        d.set(0, 0, p);  // du = p v
        A.diffs[n] = std::move(d);
        A.finalize();
        return A;
    }
    if (head == "truncated_poly") {
        require(args.size() == 2, errc::input, "truncated_poly takes (n, height)");
        int n = arg_int(0), h = arg_int(1);
        require(n >= 2 && h >= 2, errc::input, "truncated_poly(n, h) needs n >= 2, h >= 2");
        DGAlgebra A;
        A.ring = RingTag::integers();
        A.label = "truncated_poly(" + std::to_string(n) + "," + std::to_string(h) + ")";
        A.basis.add(0, "1");
        for (int k = 1; k < h; ++k)
            A.basis.add(k * n, "x" + std::to_string(n) + (k > 1 ? "^" + std::to_string(k) : ""));
        A.unit = {1};
        A.augment = {1};
        A.finalize();
        fill_unit_products(A, 0);
        A.finalize();
        // x^a * x^b = x^{a+b} while a+b < h
        for (int a = 1; a < h; ++a)
            for (int b = 1; a + b < h; ++b) {
                int ga = A.global(a * n, 0), gb = A.global(b * n, 0);
                A.product_table[{ga, gb}][A.global((a + b) * n, 0)] = 1;
            }
        A.has_cup1 = true;  // zero cup-one is valid: commutative, zero differential
        A.finalize();
        return A;
    }
    if (head == "tensor") {
        require(args.size() == 2, errc::input, "tensor takes two presets");
        DGAlgebra T = tensor_dga(preset(strip(args[0])), preset(strip(args[1])));
        // no canonical cup-one on a tensor product; reject at use sites
        T.has_cup1 = false;
        T.cup1_table.clear();
        return T;
    }
    throw error(errc::input, "unknown preset '" + spec + "'");
}

}  // namespace dgc
