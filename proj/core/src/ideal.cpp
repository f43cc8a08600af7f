#include "intdiff/ideal.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <future>
#include <numeric>

#include "intdiff/error.hpp"

namespace intdiff {

namespace {

std::vector<std::size_t> elements(Subset s)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; s != 0; ++i, s >>= 1U)
        if (s & 1U)
            out.push_back(i + 1);
    return out;
}

bool comparable(Subset x, Subset y) noexcept
{
    Subset both = x & y;
    return both == x || both == y;
}

Subset full_set(std::size_t n)
{
    return n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1;
}

void check_dim(std::size_t n)
{
    if (n == 0 || n > max_lattice_dim)
        throw AlgebraError(ErrorCode::BadParameter, "lattice dimension must be in 1.." + std::to_string(max_lattice_dim));
}

void require_same_dim(const IdealDescriptor& a, const IdealDescriptor& b)
{
    if (a.dim() != b.dim())
        throw AlgebraError(ErrorCode::DimensionMismatch, "ideals of different dimensions");
}

std::vector<Subset> minimal_members(std::vector<Subset> family)
{
    std::sort(family.begin(), family.end(), subset_less);
    family.erase(std::unique(family.begin(), family.end()), family.end());
    std::vector<Subset> out;
    for (Subset s : family) {
        bool dominated = std::any_of(out.begin(), out.end(), [s](Subset t) { return (t & s) == t; });
        if (!dominated)
            out.push_back(s);
    }
    return out;
}

}  // namespace

bool subset_less(Subset a, Subset b) noexcept
{
    int pa = std::popcount(a);
    int pb = std::popcount(b);
    if (pa != pb)
        return pa < pb;
    // same size: lexicographic on ascending element lists, i.e. the lowest differing bit
    // belongs to the smaller set
    Subset diff = a ^ b;
    if (diff == 0)
        return false;
    Subset lowest = diff & (~diff + 1);
    return (a & lowest) != 0;
}

IdealDescriptor::IdealDescriptor(std::size_t n, Kind kind, std::vector<Subset> min)
    : n_(n), kind_(kind), min_(std::move(min))
{
}

IdealDescriptor IdealDescriptor::zero(std::size_t n)
{
    check_dim(n);
    return IdealDescriptor(n, Kind::zero, {});
}

IdealDescriptor IdealDescriptor::whole(std::size_t n)
{
    check_dim(n);
    return IdealDescriptor(n, Kind::whole, {});
}

IdealDescriptor IdealDescriptor::from_min_primes(std::size_t n, std::vector<Subset> antichain)
{
    check_dim(n);
    if (antichain.empty())
        throw AlgebraError(ErrorCode::NotAntichain, "a proper ideal needs at least one minimal prime");
    for (Subset s : antichain) {
        if (s == 0)
            throw AlgebraError(ErrorCode::EmptySet, "minimal primes are indexed by nonempty subsets");
        if ((s & ~full_set(n)) != 0)
            throw AlgebraError(ErrorCode::IndexOutOfRange, "subset " + subset_to_string(s) + " exceeds n");
    }
    std::sort(antichain.begin(), antichain.end(), subset_less);
    for (std::size_t i = 0; i < antichain.size(); ++i)
        for (std::size_t j = i + 1; j < antichain.size(); ++j)
            if (comparable(antichain[i], antichain[j]))
                throw AlgebraError(ErrorCode::NotAntichain,
                                   subset_to_string(antichain[i]) + " and " + subset_to_string(antichain[j]) +
                                       " are comparable");
    return IdealDescriptor(n, Kind::proper, std::move(antichain));
}

IdealDescriptor IdealDescriptor::from_generators(std::size_t n, std::vector<Subset> family)
{
    return from_min_primes(n, minimal_members(std::move(family)));
}

IdealDescriptor prime(Subset indices, std::size_t n)
{
    if (indices == 0)
        throw AlgebraError(ErrorCode::EmptySet, "prime ideals are indexed by nonempty subsets");
    return IdealDescriptor::from_min_primes(n, {indices});
}

IdealDescriptor prime(const std::vector<std::size_t>& one_based, std::size_t n)
{
    check_dim(n);
    Subset s = 0;
    for (std::size_t i : one_based) {
        if (i < 1 || i > n)
            throw AlgebraError(ErrorCode::IndexOutOfRange, "index " + std::to_string(i) + " not in 1..n");
        s |= Subset{1} << (i - 1);
    }
    return prime(s, n);
}

IdealDescriptor maximal_ideal(std::size_t n)
{
    check_dim(n);
    return prime(full_set(n), n);
}

IdealDescriptor smallest_ideal(std::size_t n)
{
    check_dim(n);
    std::vector<Subset> singles;
    for (std::size_t i = 0; i < n; ++i)
        singles.push_back(Subset{1} << i);
    return IdealDescriptor::from_min_primes(n, std::move(singles));
}

IdealDescriptor ideal_sum(const IdealDescriptor& a, const IdealDescriptor& b)
{
    require_same_dim(a, b);
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.is_whole() || b.is_whole())
        return IdealDescriptor::whole(a.dim());
    // distributivity: (∩ p_I) + (∩ p_J) = ∩ p_{I∪J}
    std::vector<Subset> family;
    for (Subset i : a.antichain())
        for (Subset j : b.antichain())
            family.push_back(i | j);
    return IdealDescriptor::from_generators(a.dim(), std::move(family));
}

IdealDescriptor ideal_intersect(const IdealDescriptor& a, const IdealDescriptor& b)
{
    require_same_dim(a, b);
    if (a.is_zero() || b.is_zero())
        return IdealDescriptor::zero(a.dim());
    if (a.is_whole())
        return b;
    if (b.is_whole())
        return a;
    std::vector<Subset> family(a.antichain());
    family.insert(family.end(), b.antichain().begin(), b.antichain().end());
    return IdealDescriptor::from_generators(a.dim(), std::move(family));
}

IdealDescriptor ideal_product(const IdealDescriptor& a, const IdealDescriptor& b)
{
    // every ideal is idempotent and products coincide with intersections
    return ideal_intersect(a, b);
}

bool contains(const IdealDescriptor& a, const IdealDescriptor& b)
{
    return ideal_intersect(a, b) == b;
}

bool equals(const IdealDescriptor& a, const IdealDescriptor& b)
{
    require_same_dim(a, b);
    return a == b;
}

const std::vector<Subset>& min_primes(const IdealDescriptor& a)
{
    if (!a.is_proper())
        throw AlgebraError(ErrorCode::NotProper, "minimal primes are defined for proper ideals");
    return a.antichain();
}

std::size_t height(const IdealDescriptor& prime_ideal)
{
    if (!is_prime(prime_ideal))
        throw AlgebraError(ErrorCode::NotProper, "height is defined for nonzero proper primes");
    return static_cast<std::size_t>(std::popcount(prime_ideal.antichain().front()));
}

bool is_prime(const IdealDescriptor& a)
{
    return a.is_proper() && a.antichain().size() == 1;
}

bool contains_monomial_pattern(const IdealDescriptor& a, Subset matrix_mask) noexcept
{
    switch (a.kind()) {
    case IdealDescriptor::Kind::zero: return false;
    case IdealDescriptor::Kind::whole: return true;
    case IdealDescriptor::Kind::proper: break;
    }
    return std::all_of(a.antichain().begin(), a.antichain().end(),
                       [matrix_mask](Subset s) { return (s & matrix_mask) != 0; });
}

IdealDescriptor from_function_antichain(std::size_t n, const std::vector<BoolFunction>& functions)
{
    check_dim(n);
    std::vector<Subset> zero_sets;
    for (const auto& f : functions) {
        if (f.size() != n)
            throw AlgebraError(ErrorCode::DimensionMismatch, "function length differs from n");
        Subset z = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (f[i] > 1)
                throw AlgebraError(ErrorCode::BadParameter, "functions take values in {0,1}");
            if (f[i] == 0)
                z |= Subset{1} << i;
        }
        zero_sets.push_back(z);
    }
    std::sort(zero_sets.begin(), zero_sets.end());
    zero_sets.erase(std::unique(zero_sets.begin(), zero_sets.end()), zero_sets.end());
    for (std::size_t i = 0; i < zero_sets.size(); ++i)
        for (std::size_t j = i + 1; j < zero_sets.size(); ++j)
            if (comparable(zero_sets[i], zero_sets[j]))
                throw AlgebraError(ErrorCode::NotAntichain, "functions are comparable");

    // I_f is the intersection of p_i over the zeros of f (the whole algebra when f ≡ 1)
    IdealDescriptor acc = IdealDescriptor::zero(n);
    for (Subset z : zero_sets) {
        IdealDescriptor term = IdealDescriptor::whole(n);
        if (z != 0) {
            std::vector<Subset> singles;
            for (std::size_t i = 0; i < n; ++i)
                if (z & (Subset{1} << i))
                    singles.push_back(Subset{1} << i);
            term = IdealDescriptor::from_min_primes(n, std::move(singles));
        }
        acc = ideal_sum(acc, term);
    }
    return acc;
}

std::vector<BoolFunction> to_function_antichain(const IdealDescriptor& a)
{
    const std::size_t n = a.dim();
    if (a.is_zero())
        return {};
    if (a.is_whole())
        return {BoolFunction(n, 1)};
    // zero sets of the functions are the minimal transversals of Min(a)
    std::vector<Subset> hitting;
    for (Subset t = 0; t <= full_set(n); ++t) {
        if (contains_monomial_pattern(a, t))
            hitting.push_back(t);
        if (t == full_set(n))
            break;
    }
    std::vector<BoolFunction> out;
    for (Subset t : minimal_members(std::move(hitting))) {
        BoolFunction f(n, 1);
        for (std::size_t i = 0; i < n; ++i)
            if (t & (Subset{1} << i))
                f[i] = 0;
        out.push_back(std::move(f));
    }
    return out;
}

namespace {

void extend_antichains(std::size_t n, const std::vector<Subset>& order, std::size_t start, std::vector<Subset>& chosen,
                       std::vector<IdealDescriptor>& out)
{
    for (std::size_t k = start; k < order.size(); ++k) {
        Subset s = order[k];
        bool ok = std::none_of(chosen.begin(), chosen.end(), [s](Subset c) { return comparable(c, s); });
        if (!ok)
            continue;
        chosen.push_back(s);
        out.push_back(IdealDescriptor::from_min_primes(n, chosen));
        extend_antichains(n, order, k + 1, chosen, out);
        chosen.pop_back();
    }
}

}  // namespace

std::vector<IdealDescriptor> enumerate_ideals(std::size_t n, bool parallel)
{
    check_dim(n);
    if (n > max_enumeration_dim)
        throw AlgebraError(ErrorCode::TooLarge, "ideal enumeration is limited to n <= " +
                                                    std::to_string(max_enumeration_dim));
    std::vector<Subset> order;
    for (Subset s = 1; s <= full_set(n); ++s)
        order.push_back(s);
    std::sort(order.begin(), order.end(), subset_less);

    // the search tree is split by its first (smallest) member; merging the branches
    // in member order reproduces the sequential preorder
    auto branch = [n, &order](std::size_t k) {
        std::vector<IdealDescriptor> part;
        std::vector<Subset> chosen{order[k]};
        part.push_back(IdealDescriptor::from_min_primes(n, chosen));
        extend_antichains(n, order, k + 1, chosen, part);
        return part;
    };

    std::vector<IdealDescriptor> out{IdealDescriptor::zero(n)};
    if (parallel) {
        std::vector<std::future<std::vector<IdealDescriptor>>> jobs;
        for (std::size_t k = 0; k < order.size(); ++k)
            jobs.push_back(std::async(std::launch::async, branch, k));
        for (auto& j : jobs) {
            auto part = j.get();
            out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
    } else {
        for (std::size_t k = 0; k < order.size(); ++k) {
            auto part = branch(k);
            out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
    }
    out.push_back(IdealDescriptor::whole(n));
    return out;
}

std::size_t count_ideals(std::size_t n, bool parallel)
{
    return enumerate_ideals(n, parallel).size();
}

IdealDescriptor apply_permutation(const Permutation& s, const IdealDescriptor& a)
{
    if (s.size() != a.dim())
        throw AlgebraError(ErrorCode::DimensionMismatch, "permutation degree differs from n");
    if (!a.is_proper())
        return a;
    std::vector<Subset> moved;
    for (Subset x : a.antichain())
        moved.push_back(s.apply_to_subset(x));
    return IdealDescriptor::from_min_primes(a.dim(), std::move(moved));
}

std::uint64_t factorial(std::size_t k)
{
    std::uint64_t r = 1;
    for (std::size_t i = 2; i <= k; ++i)
        r *= i;
    return r;
}

std::uint64_t GenericStructure::stabilizer_order() const
{
    std::uint64_t order = factorial(m);
    for (auto [h, count] : blocks) {
        for (std::size_t i = 0; i < count; ++i)
            order *= factorial(h);
        order *= factorial(count);
    }
    return order;
}

bool is_generic(const IdealDescriptor& a)
{
    const auto& min = min_primes(a);
    Subset seen = 0;
    for (Subset s : min) {
        if ((seen & s) != 0)
            return false;
        seen |= s;
    }
    return true;
}

GenericStructure generic_structure(const IdealDescriptor& a)
{
    if (!is_generic(a))
        throw AlgebraError(ErrorCode::BadParameter, "ideal is not generic: " + to_string(a));
    GenericStructure g;
    std::size_t covered = 0;
    for (Subset s : a.antichain()) {
        auto h = static_cast<std::size_t>(std::popcount(s));
        covered += h;
        if (!g.blocks.empty() && g.blocks.back().first == h)
            ++g.blocks.back().second;
        else
            g.blocks.emplace_back(h, 1);
    }
    g.m = a.dim() - covered;
    return g;
}

StabilizerReport stabilizer(const IdealDescriptor& a)
{
    const auto& min = min_primes(a);
    const std::size_t n = a.dim();
    if (n > 10)
        throw AlgebraError(ErrorCode::TooLarge, "stabilizer scan is limited to n <= 10");
    StabilizerReport report;
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{0});
    std::vector<Subset> moved(min.size());
    do {
        Permutation p(images);
        for (std::size_t k = 0; k < min.size(); ++k)
            moved[k] = p.apply_to_subset(min[k]);
        std::sort(moved.begin(), moved.end(), subset_less);
        if (moved == min)
            report.permutations.push_back(std::move(p));
    } while (std::next_permutation(images.begin(), images.end()));
    report.order = report.permutations.size();
    report.index = factorial(n) / report.order;
    if (is_generic(a))
        report.generic = generic_structure(a);
    return report;
}

std::vector<IdealDescriptor> invariant_ideals(std::size_t n)
{
    check_dim(n);
    std::vector<IdealDescriptor> out{IdealDescriptor::zero(n)};
    for (std::size_t s = 1; s <= n; ++s) {
        std::vector<Subset> level;
        for (Subset x = 1; x <= full_set(n); ++x) {
            if (static_cast<std::size_t>(std::popcount(x)) == s)
                level.push_back(x);
            if (x == full_set(n))
                break;
        }
        out.push_back(IdealDescriptor::from_min_primes(n, std::move(level)));
    }
    out.push_back(IdealDescriptor::whole(n));
    return out;
}

std::string subset_to_string(Subset s)
{
    std::string out = "{";
    bool first = true;
    for (std::size_t i : elements(s)) {
        if (!first)
            out += ',';
        first = false;
        out += std::to_string(i);
    }
    return out + "}";
}

std::string to_string(const IdealDescriptor& a)
{
    switch (a.kind()) {
    case IdealDescriptor::Kind::zero: return "0";
    case IdealDescriptor::Kind::whole: return "1";
    case IdealDescriptor::Kind::proper: break;
    }
    std::string s = "min{ ";
    for (std::size_t k = 0; k < a.antichain().size(); ++k) {
        if (k != 0)
            s += ", ";
        s += subset_to_string(a.antichain()[k]);
    }
    return s + " }";
}

namespace {

class IdealTextReader {
public:
    explicit IdealTextReader(std::string_view text) : text_(text) {}

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool at_end()
    {
        skip_ws();
        return pos_ == text_.size();
    }
    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c)
    {
        if (!accept(c))
            throw SyntaxError(pos_, std::string("expected '") + c + "'");
    }
    bool accept_word(std::string_view w)
    {
        skip_ws();
        if (text_.substr(pos_, w.size()) == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }
    std::size_t number()
    {
        skip_ws();
        std::size_t start = pos_;
        std::size_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
            if (v > 1000)
                throw SyntaxError(start, "index too large");
            ++pos_;
        }
        if (pos_ == start)
            throw SyntaxError(pos_, "expected an index");
        return v;
    }
    std::size_t pos() const { return pos_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

IdealDescriptor parse_ideal(std::string_view text, std::size_t n)
{
    check_dim(n);
    IdealTextReader r(text);
    if (r.accept_word("min")) {
        r.expect('{');
        std::vector<Subset> family;
        do {
            r.expect('{');
            Subset s = 0;
            if (!r.accept('}')) {
                do {
                    std::size_t pos = r.pos();
                    std::size_t i = r.number();
                    if (i < 1 || i > n)
                        throw AlgebraError(ErrorCode::IndexOutOfRange,
                                           "index " + std::to_string(i) + " at byte " + std::to_string(pos) +
                                               " not in 1.." + std::to_string(n));
                    s |= Subset{1} << (i - 1);
                } while (r.accept(','));
                r.expect('}');
            }
            family.push_back(s);
        } while (r.accept(','));
        r.expect('}');
        if (!r.at_end())
            throw SyntaxError(r.pos(), "trailing input");
        return IdealDescriptor::from_min_primes(n, std::move(family));
    }
    std::size_t pos = r.pos();
    std::size_t v = r.number();
    if (!r.at_end() || v > 1)
        throw SyntaxError(pos, "expected 0, 1, or min{...}");
    return v == 0 ? IdealDescriptor::zero(n) : IdealDescriptor::whole(n);
}

}  // namespace intdiff
