#include "verlinde/lie.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace verlinde {

namespace {

void check_same_rank(std::size_t a, std::size_t b) {
    if (a != b) throw std::invalid_argument("weight rank mismatch");
}

// row-reduce [A | I] to invert A over the rationals
std::vector<std::vector<Rational>> invert(const std::vector<std::vector<std::int64_t>>& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
        m[i][n + i] = Rational(1);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::logic_error("singular Cartan matrix");
        std::swap(m[col], m[piv]);
        Rational inv = Rational(1) / m[col][col];
        for (auto& x : m[col]) x *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            Rational f = m[row][col];
            for (std::size_t j = 0; j < 2 * n; ++j) m[row][j] -= f * m[col][j];
        }
    }
    std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = m[i][n + j];
    return out;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) { std::swap(m[col], m[piv]); det = -det; }
        det *= m[col][col];
        Rational inv = Rational(1) / m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            Rational f = m[row][col] * inv;
            for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
        }
    }
    return det;
}

std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

struct TypeTables {
    std::vector<Rational> lengths;              // squared root lengths
    std::vector<std::pair<int, int>> edges;     // Dynkin diagram
    std::int64_t weyl_order;
};

TypeTables type_tables(char series, int rank) {
    TypeTables t;
    auto chain = [&](int n) {
        for (int i = 0; i + 1 < n; ++i) t.edges.emplace_back(i, i + 1);
    };
    switch (series) {
    case 'A':
        if (rank < 1 || rank > 7)
            throw std::invalid_argument("type A supports ranks 1..7");
        t.lengths.assign(rank, Rational(2));
        chain(rank);
        t.weyl_order = factorial(rank + 1);
        break;
    case 'B':
        if (rank < 2 || rank > 7)
            throw std::invalid_argument("type B supports ranks 2..7");
        t.lengths.assign(rank, Rational(2));
        t.lengths[rank - 1] = Rational(1);
        chain(rank);
        t.weyl_order = (std::int64_t(1) << rank) * factorial(rank);
        break;
    case 'C':
        if (rank < 2 || rank > 7)
            throw std::invalid_argument("type C supports ranks 2..7");
        t.lengths.assign(rank, Rational(1));
        t.lengths[rank - 1] = Rational(2);
        chain(rank);
        t.weyl_order = (std::int64_t(1) << rank) * factorial(rank);
        break;
    case 'D':
        if (rank < 4 || rank > 7)
            throw std::invalid_argument("type D supports ranks 4..7");
        t.lengths.assign(rank, Rational(2));
        for (int i = 0; i + 1 < rank - 2; ++i) t.edges.emplace_back(i, i + 1);
        t.edges.emplace_back(rank - 3, rank - 2);
        t.edges.emplace_back(rank - 3, rank - 1);
        t.weyl_order = (std::int64_t(1) << (rank - 1)) * factorial(rank);
        break;
    case 'E':
        if (rank == 7 || rank == 8)
            throw std::invalid_argument(
                "E7 and E8 are not supported: full Weyl-group enumeration would exceed "
                "the 2e6-element cap");
        if (rank != 6) throw std::invalid_argument("type E supports rank 6 only");
        t.lengths.assign(6, Rational(2));
        t.edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
        t.weyl_order = 51840;
        break;
    case 'F':
        if (rank != 4) throw std::invalid_argument("type F supports rank 4 only");
        t.lengths = {Rational(2), Rational(2), Rational(1), Rational(1)};
        chain(4);
        t.weyl_order = 1152;
        break;
    case 'G':
        if (rank != 2) throw std::invalid_argument("type G supports rank 2 only");
        t.lengths = {Rational(2), Rational(2, 3)};
        t.edges = {{0, 1}};
        t.weyl_order = 12;
        break;
    default:
        throw std::invalid_argument(std::string("unknown series '") + series +
                                    "' (expected one of A,B,C,D,E,F,G)");
    }
    return t;
}

} // namespace

bool Weight::is_zero() const {
    return std::all_of(labels.begin(), labels.end(), [](std::int64_t x) { return x == 0; });
}

bool Weight::is_dominant() const {
    return std::all_of(labels.begin(), labels.end(), [](std::int64_t x) { return x >= 0; });
}

Weight Weight::operator+(const Weight& o) const {
    check_same_rank(labels.size(), o.labels.size());
    Weight r = *this;
    for (std::size_t i = 0; i < labels.size(); ++i) r.labels[i] += o.labels[i];
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    check_same_rank(labels.size(), o.labels.size());
    Weight r = *this;
    for (std::size_t i = 0; i < labels.size(); ++i) r.labels[i] -= o.labels[i];
    return r;
}

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& x : r.labels) x = -x;
    return r;
}

Weight Weight::scaled(std::int64_t c) const {
    Weight r = *this;
    for (auto& x : r.labels) x *= c;
    return r;
}

RationalWeight::RationalWeight(const Weight& w) {
    labels.reserve(w.labels.size());
    for (auto x : w.labels) labels.emplace_back(x);
}

RationalWeight RationalWeight::operator+(const RationalWeight& o) const {
    check_same_rank(labels.size(), o.labels.size());
    RationalWeight r = *this;
    for (std::size_t i = 0; i < labels.size(); ++i) r.labels[i] += o.labels[i];
    return r;
}

RationalWeight RationalWeight::operator-(const RationalWeight& o) const {
    check_same_rank(labels.size(), o.labels.size());
    RationalWeight r = *this;
    for (std::size_t i = 0; i < labels.size(); ++i) r.labels[i] -= o.labels[i];
    return r;
}

TorusPoint::TorusPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    for (const auto& c : coords_) denom_ = std::lcm(denom_, c.den());
}

Rational TorusPoint::phase(const Weight& nu) const {
    check_same_rank(nu.labels.size(), coords_.size());
    Rational p(0);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        p += coords_[i] * Rational(nu.labels[i]);
    return p;
}

Rational TorusPoint::phase(const RationalWeight& nu) const {
    check_same_rank(nu.labels.size(), coords_.size());
    Rational p(0);
    for (std::size_t i = 0; i < coords_.size(); ++i) p += coords_[i] * nu.labels[i];
    return p;
}

Weight RootDatum::simple_root(int i) const {
    // alpha_i has labels equal to the i-th column of the Cartan matrix
    Weight w;
    w.labels.resize(rank_);
    for (int l = 0; l < rank_; ++l) w.labels[l] = cartan_[l][i];
    return w;
}

RootDatum build_root_datum(char series, int rank) {
    TypeTables tables = type_tables(series, rank);

    RootDatum d;
    d.series_ = series;
    d.rank_ = rank;
    d.root_lengths_ = tables.lengths;
    d.weyl_order_ = tables.weyl_order;

    std::vector<Rational> half(rank); // d_i = (alpha_i|alpha_i)/2
    for (int i = 0; i < rank; ++i) half[i] = tables.lengths[i] / Rational(2);

    d.cartan_.assign(rank, std::vector<std::int64_t>(rank, 0));
    for (int i = 0; i < rank; ++i) d.cartan_[i][i] = 2;
    for (auto [i, j] : tables.edges) {
        // (alpha_i|alpha_j) = -max(d_i, d_j) for joined nodes
        Rational prod = -std::max(half[i], half[j]);
        Rational aij = prod / half[i];
        Rational aji = prod / half[j];
        if (!aij.is_integer() || !aji.is_integer())
            throw std::logic_error("non-integral Cartan entry");
        d.cartan_[i][j] = aij.num();
        d.cartan_[j][i] = aji.num();
    }

    d.rho_ = Weight(std::vector<std::int64_t>(rank, 1));

    // positive roots: reflection closure from the simple roots, tracked in
    // simple-root coordinates so positivity and height stay readable
    std::set<std::vector<std::int64_t>> seen;
    std::queue<std::vector<std::int64_t>> work;
    for (int i = 0; i < rank; ++i) {
        std::vector<std::int64_t> c(rank, 0);
        c[i] = 1;
        seen.insert(c);
        work.push(c);
    }
    while (!work.empty()) {
        auto c = work.front();
        work.pop();
        for (int i = 0; i < rank; ++i) {
            std::int64_t label_i = 0;
            for (int j = 0; j < rank; ++j) label_i += d.cartan_[i][j] * c[j];
            auto c2 = c;
            c2[i] -= label_i;
            if (std::all_of(c2.begin(), c2.end(), [](std::int64_t x) { return x >= 0; }) &&
                seen.insert(c2).second)
                work.push(c2);
        }
    }

    struct Entry {
        std::int64_t height;
        Weight labels;
        std::vector<std::int64_t> coeffs;
    };
    std::vector<Entry> roots;
    for (const auto& c : seen) {
        Entry e;
        e.coeffs = c;
        e.height = std::accumulate(c.begin(), c.end(), std::int64_t(0));
        e.labels.labels.resize(rank);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) e.labels.labels[i] += d.cartan_[i][j] * c[j];
        roots.push_back(std::move(e));
    }
    std::sort(roots.begin(), roots.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.height, a.labels.labels) < std::tie(b.height, b.labels.labels);
    });
    for (const auto& e : roots) d.positive_roots_.push_back(e.labels);

    const Entry& top = roots.back();
    d.theta_ = top.labels;
    if (!d.theta_.is_dominant()) throw std::logic_error("highest root not dominant");

    // comarks from the simple-root coefficients of theta
    d.comarks_.resize(rank);
    std::int64_t comark_sum = 0;
    for (int i = 0; i < rank; ++i) {
        Rational cm = Rational(top.coeffs[i]) * half[i];
        if (!cm.is_integer()) throw std::logic_error("non-integral comark");
        d.comarks_[i] = cm.num();
        comark_sum += cm.num();
    }
    d.dual_coxeter_ = 1 + comark_sum;

    // Gram matrix of the fundamental weights: F = diag(d_i) * A^{-1}
    auto ainv = invert(d.cartan_);
    d.gram_.assign(rank, std::vector<Rational>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) d.gram_[i][j] = half[i] * ainv[i][j];

    if (inner_product(d, d.theta_, d.theta_) != Rational(2))
        throw std::logic_error("highest root squared length != 2");

    return d;
}

RootDatum build_root_datum(std::string_view label) {
    if (label.size() < 2 || !std::isalpha(static_cast<unsigned char>(label[0])))
        throw std::invalid_argument("group label must look like \"A2\" or \"G2\"");
    char series = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
    int rank = 0;
    for (std::size_t i = 1; i < label.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(label[i])))
            throw std::invalid_argument("group label must look like \"A2\" or \"G2\"");
        rank = rank * 10 + (label[i] - '0');
    }
    return build_root_datum(series, rank);
}

Rational inner_product(const RootDatum& d, const Weight& a, const Weight& b) {
    check_same_rank(a.rank(), static_cast<std::size_t>(d.rank()));
    check_same_rank(b.rank(), static_cast<std::size_t>(d.rank()));
    Rational s(0);
    for (int i = 0; i < d.rank(); ++i) {
        if (a.labels[i] == 0) continue;
        Rational row(0);
        for (int j = 0; j < d.rank(); ++j)
            row += d.gram()[i][j] * Rational(b.labels[j]);
        s += Rational(a.labels[i]) * row;
    }
    return s;
}

Rational inner_product(const RootDatum& d, const Weight& a, const RationalWeight& b) {
    check_same_rank(a.rank(), static_cast<std::size_t>(d.rank()));
    check_same_rank(b.rank(), static_cast<std::size_t>(d.rank()));
    Rational s(0);
    for (int i = 0; i < d.rank(); ++i) {
        if (a.labels[i] == 0) continue;
        Rational row(0);
        for (int j = 0; j < d.rank(); ++j) row += d.gram()[i][j] * b.labels[j];
        s += Rational(a.labels[i]) * row;
    }
    return s;
}

std::int64_t weight_level(const RootDatum& d, const Weight& w) {
    check_same_rank(w.rank(), static_cast<std::size_t>(d.rank()));
    std::int64_t lvl = 0;
    for (int i = 0; i < d.rank(); ++i) lvl += d.comarks()[i] * w.labels[i];
    return lvl;
}

bool in_level_alcove(const RootDatum& d, const Weight& w, std::int64_t k) {
    return w.is_dominant() && weight_level(d, w) <= k;
}

std::vector<Weight> level_k_weights(const RootDatum& d, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("level must be non-negative");
    std::vector<Weight> out;
    Weight cur(std::vector<std::int64_t>(d.rank(), 0));

    // depth-first with ascending labels yields lexicographic order
    auto rec = [&](auto&& self, int pos, std::int64_t budget) -> void {
        if (pos == d.rank()) {
            out.push_back(cur);
            return;
        }
        std::int64_t comark = d.comarks()[pos];
        for (std::int64_t v = 0; v * comark <= budget; ++v) {
            cur.labels[pos] = v;
            self(self, pos + 1, budget - v * comark);
        }
        cur.labels[pos] = 0;
    };
    rec(rec, 0, k);
    return out;
}

std::vector<std::vector<std::int64_t>> pairing_matrix(const RootDatum& d, std::int64_t l) {
    // B_l(alpha_i^vee, alpha_j^vee) = l * A_ij * 2/(alpha_j|alpha_j)
    std::vector<std::vector<std::int64_t>> m(d.rank(), std::vector<std::int64_t>(d.rank()));
    for (int i = 0; i < d.rank(); ++i)
        for (int j = 0; j < d.rank(); ++j) {
            Rational v = Rational(l * d.cartan()[i][j]) * Rational(2) / d.root_lengths()[j];
            if (!v.is_integer()) throw std::logic_error("non-integral coroot pairing");
            m[i][j] = v.num();
        }
    return m;
}

std::vector<std::vector<std::int64_t>> restriction_class(const RootDatum& d, std::int64_t l) {
    return pairing_matrix(d, l);
}

bool canonical_split_exists(const RootDatum& d, std::int64_t l) {
    auto m = pairing_matrix(d, l);
    for (int i = 0; i < d.rank(); ++i)
        for (int j = 0; j < d.rank(); ++j)
            if (i != j && m[i][j] % 2 != 0) return false;
    return true;
}

std::int64_t torus_order(const RootDatum& d, std::int64_t l) {
    if (l < 1) throw std::invalid_argument("torus_order requires l >= 1");
    auto m = pairing_matrix(d, l);
    std::vector<std::vector<Rational>> rm(d.rank(), std::vector<Rational>(d.rank()));
    for (int i = 0; i < d.rank(); ++i)
        for (int j = 0; j < d.rank(); ++j) rm[i][j] = Rational(m[i][j]);
    Rational det = determinant(rm);
    if (!det.is_integer() || det.is_zero()) throw std::logic_error("bad pairing determinant");
    return det.num() < 0 ? -det.num() : det.num();
}

TorusPoint t_lambda(const RootDatum& d, const Weight& lambda, std::int64_t k) {
    if (!in_level_alcove(d, lambda, k))
        throw std::invalid_argument("t_lambda: weight is not level-" + std::to_string(k) +
                                    " dominant");
    const Weight shifted = lambda + d.rho();
    const Rational denom(k + d.dual_coxeter());
    std::vector<Rational> coords(d.rank());
    for (int i = 0; i < d.rank(); ++i) {
        Rational s(0);
        for (int j = 0; j < d.rank(); ++j)
            s += d.gram()[i][j] * Rational(shifted.labels[j]);
        coords[i] = s / denom;
    }
    return TorusPoint(std::move(coords));
}

std::vector<Rational> prequantized_conjugacy_class(const RootDatum& d, const Weight& mu,
                                                   std::int64_t k) {
    if (k < 1) throw std::invalid_argument("conjugacy-class labeling requires k >= 1");
    if (!in_level_alcove(d, mu, k))
        throw std::invalid_argument("weight is outside the level-" + std::to_string(k) +
                                    " alcove");
    std::vector<Rational> coords(d.rank());
    for (int i = 0; i < d.rank(); ++i) {
        Rational s(0);
        for (int j = 0; j < d.rank(); ++j) s += d.gram()[i][j] * Rational(mu.labels[j]);
        coords[i] = s / Rational(k);
    }
    return coords;
}

std::string root_datum_to_json(const RootDatum& d) {
    nlohmann::json j;
    j["type"] = d.type_label();
    j["rank"] = d.rank();
    j["cartan"] = d.cartan();
    j["comarks"] = d.comarks();
    j["dual_coxeter"] = d.dual_coxeter();
    std::vector<std::vector<std::string>> gram;
    for (const auto& row : d.gram()) {
        std::vector<std::string> r;
        for (const auto& x : row) r.push_back(x.str());
        gram.push_back(std::move(r));
    }
    j["gram"] = gram;
    return j.dump();
}

} // namespace verlinde
