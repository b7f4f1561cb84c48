#include "ncolor/constraint.hpp"

#include <algorithm>
#include <cctype>

namespace ncolor {

namespace {

std::vector<int> normalized_set(std::vector<int> values, const char* what) {
    if (values.empty()) {
        throw std::invalid_argument(std::string(what) + " must be nonempty");
    }
    for (int v : values) {
        if (v < 1) {
            throw std::invalid_argument(std::string(what) + " entries must be positive");
        }
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

std::vector<int> parse_int_list(std::string_view text, std::size_t offset) {
    std::vector<int> values;
    std::size_t i = 0;
    while (i < text.size()) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw ParseError("expected a positive integer", offset + i);
        }
        long long value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            if (value > 1'000'000) {
                throw ParseError("list entry too large", offset + i);
            }
            ++i;
        }
        values.push_back(static_cast<int>(value));
        if (i < text.size()) {
            if (text[i] != ',') {
                throw ParseError("expected ',' between list entries", offset + i);
            }
            ++i;
            if (i == text.size()) {
                throw ParseError("trailing ','", offset + i - 1);
            }
        }
    }
    if (values.empty()) {
        throw ParseError("expected a list of positive integers", offset);
    }
    return values;
}

std::string list_text(const std::vector<int>& values) {
    std::string out;
    for (int v : values) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(v);
    }
    return out;
}

}  // namespace

ColorConstraint ColorConstraint::unrestricted() {
    return ColorConstraint();
}

ColorConstraint ColorConstraint::allowed(std::vector<int> colors) {
    ColorConstraint k;
    k.kind_ = Kind::AllowedSet;
    k.colors_ = normalized_set(std::move(colors), "allowed color set");
    return k;
}

ColorConstraint ColorConstraint::prohibited(std::vector<int> colors) {
    ColorConstraint k;
    k.kind_ = Kind::ProhibitedSet;
    k.colors_ = normalized_set(std::move(colors), "prohibited color set");
    return k;
}

ColorConstraint ColorConstraint::modular(int modulus, std::vector<int> residues) {
    if (modulus < 1) {
        throw std::invalid_argument("modulus must be at least 1");
    }
    ColorConstraint k;
    k.kind_ = Kind::Modular;
    k.modulus_ = modulus;
    k.colors_ = normalized_set(std::move(residues), "residue set");
    if (k.colors_.back() > modulus) {
        throw std::invalid_argument("residues must lie in 1..modulus");
    }
    return k;
}

ColorConstraint ColorConstraint::no_part_one_one() {
    ColorConstraint k;
    k.kind_ = Kind::NoPartOneOne;
    return k;
}

ColorConstraint ColorConstraint::parse(std::string_view text) {
    if (text == "all") {
        return unrestricted();
    }
    if (text == "no11") {
        return no_part_one_one();
    }
    if (text.starts_with("allow=")) {
        return allowed(parse_int_list(text.substr(6), 6));
    }
    if (text.starts_with("forbid=")) {
        return prohibited(parse_int_list(text.substr(7), 7));
    }
    if (text.starts_with("mod=")) {
        const std::size_t colon = text.find(':', 4);
        if (colon == std::string_view::npos) {
            throw ParseError("expected mod=M:LIST", text.size());
        }
        const std::vector<int> modulus = parse_int_list(text.substr(4, colon - 4), 4);
        if (modulus.size() != 1) {
            throw ParseError("expected a single modulus before ':'", 4);
        }
        return modular(modulus[0], parse_int_list(text.substr(colon + 1), colon + 1));
    }
    throw ParseError("expected all | allow=LIST | forbid=LIST | mod=M:LIST | no11", 0);
}

std::string ColorConstraint::describe() const {
    switch (kind_) {
        case Kind::Unrestricted:
            return "all";
        case Kind::AllowedSet:
            return "allow=" + list_text(colors_);
        case Kind::ProhibitedSet:
            return "forbid=" + list_text(colors_);
        case Kind::Modular:
            return "mod=" + std::to_string(modulus_) + ":" + list_text(colors_);
        case Kind::NoPartOneOne:
            return "no11";
    }
    return "all";
}

int ColorConstraint::min_color() const {
    if (colors_.empty()) {
        throw std::logic_error("constraint has no color set");
    }
    return colors_.front();
}

int ColorConstraint::max_color() const {
    if (colors_.empty()) {
        throw std::logic_error("constraint has no color set");
    }
    return colors_.back();
}

bool ColorConstraint::permits(int size, int color) const noexcept {
    switch (kind_) {
        case Kind::Unrestricted:
            return true;
        case Kind::AllowedSet:
            return std::binary_search(colors_.begin(), colors_.end(), color);
        case Kind::ProhibitedSet:
            return !std::binary_search(colors_.begin(), colors_.end(), color);
        case Kind::Modular: {
            int residue = color % modulus_;
            if (residue == 0) {
                residue = modulus_;
            }
            return std::binary_search(colors_.begin(), colors_.end(), residue);
        }
        case Kind::NoPartOneOne:
            return !(size == 1 && color == 1);
    }
    return true;
}

bool ColorConstraint::satisfied_by(const ColoredComposition& comp) const noexcept {
    for (const ColoredPart& part : comp.parts()) {
        if (!permits(part.size, part.color)) {
            return false;
        }
    }
    return true;
}

}  // namespace ncolor
