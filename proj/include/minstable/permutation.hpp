#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "minstable/coalition.hpp"
#include "minstable/errors.hpp"

namespace minstable {

// A bijection on {1..n}.
class Permutation {
public:
    static Permutation identity(int n) {
        std::vector<int> img(static_cast<std::size_t>(n));
        std::iota(img.begin(), img.end(), 1);
        return Permutation(std::move(img), /*checked=*/true);
    }

    // images[i-1] is the image of player i; must be a bijection on {1..n}.
    static Permutation from_images(std::vector<int> images) {
        std::vector<bool> seen(images.size(), false);
        for (int v : images) {
            if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v - 1)])
                throw out_of_range_player("not a bijection on {1.." + std::to_string(images.size()) + "}");
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
        return Permutation(std::move(images), true);
    }

    static Permutation transposition(int n, int a, int b) {
        Permutation p = identity(n);
        if (a < 1 || a > n || b < 1 || b > n) throw out_of_range_player("transposition outside {1..n}");
        std::swap(p.img_[static_cast<std::size_t>(a - 1)], p.img_[static_cast<std::size_t>(b - 1)]);
        return p;
    }

    int players() const { return static_cast<int>(img_.size()); }

    int operator()(int player) const { return img_[static_cast<std::size_t>(player - 1)]; }

    // compose(p, q)(i) = p(q(i)).
    friend Permutation compose(const Permutation& p, const Permutation& q) {
        if (p.players() != q.players()) throw mismatched_player_sets("composing permutations of different n");
        std::vector<int> img(p.img_.size());
        for (int i = 1; i <= p.players(); ++i) img[static_cast<std::size_t>(i - 1)] = p(q(i));
        return Permutation(std::move(img), true);
    }

    Permutation inverse() const {
        std::vector<int> img(img_.size());
        for (int i = 1; i <= players(); ++i) img[static_cast<std::size_t>((*this)(i)-1)] = i;
        return Permutation(std::move(img), true);
    }

    // Elementwise image of a coalition.
    Coalition image_of(const Coalition& c) const {
        if (c.players() != players()) throw mismatched_player_sets("permutation/coalition player count mismatch");
        Coalition out(players());
        for (int p : c.members()) out.add((*this)(p));
        return out;
    }

    const std::vector<int>& images() const { return img_; }

    bool operator==(const Permutation& o) const { return img_ == o.img_; }

    // All n! permutations, in lexicographic order of their image vectors.
    static std::vector<Permutation> all(int n) {
        if (n < 1 || n > 10) throw too_large("permutation enumeration limited to n <= 10");
        std::vector<Permutation> out;
        Permutation p = identity(n);
        do {
            out.push_back(p);
        } while (std::next_permutation(p.img_.begin(), p.img_.end()));
        return out;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(i + 1) + "->" + std::to_string(img_[i]);
        }
        return s + "]";
    }

private:
    Permutation(std::vector<int> img, bool) : img_(std::move(img)) {}
    std::vector<int> img_;
};

} // namespace minstable
