#include "snccc/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "snccc/error.hpp"

namespace snccc {

void validate_permutation(const Permutation& perm, std::size_t M) {
    if (perm.size() != M) {
        throw InvalidInput("permutation " + format_permutation(perm) + " has " + std::to_string(perm.size()) +
                           " entries, expected " + std::to_string(M));
    }
    std::vector<bool> seen(M + 1, false);
    for (int v : perm) {
        if (v < 1 || static_cast<std::size_t>(v) > M || seen[static_cast<std::size_t>(v)]) {
            throw InvalidInput("permutation " + format_permutation(perm) + " is not a bijection on {1.." +
                               std::to_string(M) + "}");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

namespace {

void require_blocks(std::size_t M, std::size_t P) {
    if (P == 0 || M == 0 || M % P != 0) {
        throw InvalidInput("P must divide M (M = " + std::to_string(M) + ", P = " + std::to_string(P) + ")");
    }
}

std::size_t constrained_positions(std::size_t P, MuRange range) {
    return range == MuRange::strict ? P - 1 : P;
}

// Position of each image (0-based) inside a permutation.
std::vector<std::size_t> inverse(const Permutation& perm) {
    std::vector<std::size_t> pos(perm.size() + 1);
    for (std::size_t i = 0; i < perm.size(); ++i) pos[static_cast<std::size_t>(perm[i])] = i;
    return pos;
}

bool column_disjoint(const std::vector<Permutation>& perms, std::size_t M, std::size_t P, MuRange range) {
    const std::size_t limit = constrained_positions(P, range);
    for (std::size_t mu = 0; mu < limit; ++mu) {
        std::vector<std::ptrdiff_t> owner(M + 1, -1);
        for (std::size_t j = 0; j < perms.size(); ++j) {
            for (std::size_t pos = mu; pos < M; pos += P) {
                auto& o = owner[static_cast<std::size_t>(perms[j][pos])];
                if (o >= 0 && o != static_cast<std::ptrdiff_t>(j)) return false;
                o = static_cast<std::ptrdiff_t>(j);
            }
        }
    }
    return true;
}

bool offset_unique(const std::vector<Permutation>& perms, std::size_t M, std::size_t P) {
    const auto block = static_cast<std::ptrdiff_t>(P);
    for (std::size_t j1 = 0; j1 < perms.size(); ++j1) {
        for (std::size_t j2 = j1 + 1; j2 < perms.size(); ++j2) {
            const auto where = inverse(perms[j2]);
            for (std::size_t p1 = 0; p1 < M; ++p1) {
                const std::size_t p2 = where[static_cast<std::size_t>(perms[j1][p1])];
                const auto mu1 = static_cast<std::ptrdiff_t>(p1 % P);
                const auto mu2 = static_cast<std::ptrdiff_t>(p2 % P);
                const std::ptrdiff_t lo = -std::min(mu1, mu2);
                const std::ptrdiff_t hi = block - 1 - std::max(mu1, mu2);
                for (std::ptrdiff_t a = lo; a <= hi; ++a) {
                    if (a == 0) continue;
                    if (perms[j1][static_cast<std::size_t>(static_cast<std::ptrdiff_t>(p1) + a)] ==
                        perms[j2][static_cast<std::size_t>(static_cast<std::ptrdiff_t>(p2) + a)]) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

class FamilySearch {
public:
    FamilySearch(std::size_t M, std::size_t P, bool need_offset, std::uint64_t seed, MuRange range)
        : M_(M), P_(P), need_offset_(need_offset), limit_(constrained_positions(P, range)) {
        order_.resize(M);
        std::iota(order_.begin(), order_.end(), 1);
        if (seed != 0) {
            // Fisher-Yates on raw engine output keeps the order identical across
            // standard libraries.
            std::mt19937_64 rng(seed);
            for (std::size_t i = M; i > 1; --i) {
                std::swap(order_[i - 1], order_[static_cast<std::size_t>(rng() % i)]);
            }
        }
    }

    bool run(std::vector<Permutation>& out) {
        Permutation identity(M_);
        std::iota(identity.begin(), identity.end(), 1);
        perms_ = {identity};
        where_ = {inverse(identity)};
        if (!extend()) return false;
        out = perms_;
        return true;
    }

private:
    bool extend() {
        if (perms_.size() == P_) return true;
        current_.assign(M_, 0);
        used_.assign(M_ + 1, false);
        if (!place(0)) return false;
        return true;
    }

    bool place(std::size_t pos) {
        if (pos == M_) {
            perms_.push_back(current_);
            where_.push_back(inverse(current_));
            const std::vector<int> saved = current_;
            if (extend()) return true;
            perms_.pop_back();
            where_.pop_back();
            current_ = saved;
            used_.assign(M_ + 1, false);
            for (int v : current_) used_[static_cast<std::size_t>(v)] = true;
            return false;
        }
        for (int v : order_) {
            if (used_[static_cast<std::size_t>(v)] || !admissible(pos, v)) continue;
            current_[pos] = v;
            used_[static_cast<std::size_t>(v)] = true;
            if (place(pos + 1)) return true;
            used_[static_cast<std::size_t>(v)] = false;
        }
        current_[pos] = 0;
        return false;
    }

    bool admissible(std::size_t pos, int v) const {
        const std::size_t mu = pos % P_;
        for (std::size_t j = 0; j < perms_.size(); ++j) {
            const std::size_t other = where_[j][static_cast<std::size_t>(v)];
            const std::size_t other_mu = other % P_;
            if (mu < limit_ && other_mu == mu) return false;
            if (!need_offset_) continue;
            const std::size_t back = std::min(mu, other_mu);
            for (std::size_t a = 1; a <= back; ++a) {
                if (current_[pos - a] == perms_[j][other - a]) return false;
            }
        }
        return true;
    }

    std::size_t M_;
    std::size_t P_;
    bool need_offset_;
    std::size_t limit_;
    std::vector<int> order_;
    std::vector<Permutation> perms_;
    std::vector<std::vector<std::size_t>> where_;
    Permutation current_;
    std::vector<bool> used_;
};

}  // namespace

PermutationCheck check_perm_family(const std::vector<Permutation>& perms, std::size_t M, std::size_t P,
                                   MuRange range) {
    require_blocks(M, P);
    for (const auto& p : perms) validate_permutation(p, M);
    return {column_disjoint(perms, M, P, range), offset_unique(perms, M, P)};
}

PermutationFamily make_perm_family(std::vector<Permutation> perms, std::size_t M, std::size_t P,
                                   MuRange range) {
    const auto check = check_perm_family(perms, M, P, range);
    return {std::move(perms), check.column_disjoint, check.offset_unique, range};
}

PermutationFamily search_perm_family(std::size_t M, std::size_t P, bool require_offset_unique,
                                     std::uint64_t seed, MuRange range) {
    require_blocks(M, P);
    FamilySearch search(M, P, require_offset_unique, seed, range);
    std::vector<Permutation> found;
    if (!search.run(found)) {
        throw NotFound("no family of " + std::to_string(P) + " permutations of {1.." + std::to_string(M) +
                       "} satisfies the column condition" +
                       (require_offset_unique ? " together with the offset-uniqueness condition" : ""));
    }
    return make_perm_family(std::move(found), M, P, range);
}

std::string format_permutation(const Permutation& perm) {
    std::string out;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(perm[i]);
    }
    return out;
}

Permutation parse_permutation(const std::string& text) {
    Permutation perm;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            perm.push_back(std::stoi(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidInput("bad permutation entry '" + item + "' in '" + text + "'");
        }
    }
    if (perm.empty()) throw InvalidInput("empty permutation");
    return perm;
}

std::vector<Permutation> parse_permutation_list(const std::string& text) {
    std::vector<Permutation> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (!item.empty()) out.push_back(parse_permutation(item));
    }
    if (out.empty()) throw InvalidInput("empty permutation list");
    return out;
}

}  // namespace snccc
