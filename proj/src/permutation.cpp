#include "ietforge/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace ietforge {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int m = static_cast<int>(images_.size());
    if (m == 0) throw Error(ErrorCode::SemanticError, "empty permutation");
    std::vector<bool> seen(m, false);
    for (int v : images_) {
        if (v < 1 || v > m || seen[v - 1])
            throw Error(ErrorCode::SemanticError, "not a bijection of {1.." +
                                                       std::to_string(m) + "}");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int m) {
    std::vector<int> v(m);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::cycle(int n) {
    std::vector<int> v(n);
    for (int i = 1; i <= n; ++i) v[i - 1] = i % n + 1;
    return Permutation(std::move(v));
}

Permutation Permutation::reversal(int n) {
    std::vector<int> v(n);
    for (int i = 1; i <= n; ++i) v[i - 1] = n + 1 - i;
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= size(); ++i) inv[images_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
}

bool Permutation::is_irreducible() const {
    // pi({1..k}) == {1..k} iff max(pi(1..k)) == k
    int running_max = 0;
    for (int k = 1; k < size(); ++k) {
        running_max = std::max(running_max, images_[k - 1]);
        if (running_max == k) return false;
    }
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(size(), false);
    for (int i = 1; i <= size(); ++i) {
        if (seen[i - 1]) continue;
        std::vector<int> cyc;
        int j = i;
        do {
            seen[j - 1] = true;
            cyc.push_back(j);
            j = images_[j - 1];
        } while (j != i);
        out.push_back(std::move(cyc));
    }
    return out;  // minimal element first by construction; ordered by min
}

bool Permutation::is_n_cycle() const {
    auto cs = cycles();
    return cs.size() == 1 && static_cast<int>(cs[0].size()) == size();
}

std::string Permutation::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < size(); ++i) os << (i ? "," : "") << images_[i];
    os << "]";
    return os.str();
}

Permutation Permutation::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 3 || s.front() != '[' || s.back() != ']')
        throw Error(ErrorCode::SyntaxError, "permutation literal must look like [2,1,...]");
    std::vector<int> images;
    std::stringstream body(s.substr(1, s.size() - 2));
    std::string item;
    while (std::getline(body, item, ',')) {
        try {
            images.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw Error(ErrorCode::SyntaxError, "bad permutation entry '" + item + "'");
        }
    }
    return Permutation(std::move(images));
}

}  // namespace ietforge
