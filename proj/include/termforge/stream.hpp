#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "termforge/term.hpp"

namespace termforge {

// Pull interface over a sequence of terms. Sources backing files yield terms
// lazily and never materialize the whole sequence.
class TermSource {
public:
    virtual ~TermSource() = default;
    virtual std::optional<Term> next() = 0;
};

using TermSink = std::function<void(Term&&)>;

class VectorSource final : public TermSource {
public:
    explicit VectorSource(std::vector<Term> terms) : terms_(std::move(terms)) {}

    std::optional<Term> next() override {
        if (pos_ == terms_.size()) {
            return std::nullopt;
        }
        return std::move(terms_[pos_++]);
    }

private:
    std::vector<Term> terms_;
    std::size_t pos_ = 0;
};

inline std::vector<Term> drain(TermSource& src) {
    std::vector<Term> out;
    while (auto t = src.next()) {
        out.push_back(std::move(*t));
    }
    return out;
}

} // namespace termforge
