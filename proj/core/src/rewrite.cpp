#include "lkrep/rewrite.hpp"

#include <cstdlib>
#include <random>
#include <vector>

namespace lkrep {

namespace {

bool far_commuting(int a, int b) { return std::abs(std::abs(a) - std::abs(b)) > 1; }

bool braid_move_applies(int a, int b, int c) {
    return a == c && ((a > 0) == (b > 0)) && std::abs(std::abs(a) - std::abs(b)) == 1;
}

}  // namespace

BraidWord rewrite_equivalent(const BraidWord& w, int steps, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int n = w.strands();
    std::vector<int> letters = w.letters();

    auto insert_pair = [&]() {
        const int gen = static_cast<int>(rng() % (n - 1)) + 1;
        const int sign = (rng() % 2 == 0) ? 1 : -1;
        const std::size_t pos = letters.empty() ? 0 : rng() % (letters.size() + 1);
        letters.insert(letters.begin() + pos, {sign * gen, -sign * gen});
    };

    for (int step = 0; step < steps; ++step) {
        const int move = static_cast<int>(rng() % 3);
        if (move == 0 || letters.size() < 2) {
            insert_pair();
            continue;
        }
        if (move == 1) {
            std::vector<std::size_t> spots;
            for (std::size_t i = 0; i + 1 < letters.size(); ++i)
                if (far_commuting(letters[i], letters[i + 1])) spots.push_back(i);
            if (spots.empty()) {
                insert_pair();
                continue;
            }
            const std::size_t i = spots[rng() % spots.size()];
            std::swap(letters[i], letters[i + 1]);
            continue;
        }
        std::vector<std::size_t> spots;
        for (std::size_t i = 0; i + 2 < letters.size(); ++i)
            if (braid_move_applies(letters[i], letters[i + 1], letters[i + 2]))
                spots.push_back(i);
        if (spots.empty()) {
            insert_pair();
            continue;
        }
        const std::size_t i = spots[rng() % spots.size()];
        const int a = letters[i];
        const int b = letters[i + 1];
        letters[i] = b;
        letters[i + 1] = a;
        letters[i + 2] = b;
    }
    return BraidWord(n, std::move(letters));
}

}  // namespace lkrep
