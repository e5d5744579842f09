#include "pedlab/shapes.hpp"

#include <sstream>

#include "pedlab/errors.hpp"

namespace pedlab {

namespace {

std::vector<int> parse_part_list(const std::string& text) {
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        if (item.empty()) throw ParseError("empty entry in part list '" + text + "'");
        for (char ch : item)
            if (ch < '0' || ch > '9') throw ParseError("invalid character in part list '" + text + "'");
        if (item.size() > 6) throw ParseError("part too large in '" + text + "'");
        parts.push_back(std::stoi(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == text.size()) throw ParseError("trailing comma in '" + text + "'");
    }
    if (parts.empty()) throw ParseError("empty part list");
    return parts;
}

std::string part_list_text(const Partition& p) {
    std::ostringstream os;
    for (int j = 1; j <= p.rows(); ++j) {
        if (j > 1) os << ",";
        os << p.part(j);
    }
    return os.str();
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 0) throw InvalidShape("negative part");
        if (k > 0 && parts_[k] > parts_[k - 1]) throw InvalidShape("parts not weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::part(int j) const {
    if (j < 1 || j > rows()) return 0;
    return parts_[static_cast<size_t>(j - 1)];
}

int Partition::total() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int i = 0; i < p; ++i) conj[static_cast<size_t>(i)] += 1;
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.rows() > rows()) return false;
    for (int j = 1; j <= mu.rows(); ++j)
        if (mu.part(j) > part(j)) return false;
    return true;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_)) throw InvalidShape("inner partition not contained in outer");
}

bool SkewShape::contains_cell(const Cell& c) const {
    return c.j >= 1 && c.i >= 1 && c.i <= outer_.part(c.j) && c.i > inner_.part(c.j);
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<size_t>(num_cells()));
    for (int j = 1; j <= outer_.rows(); ++j)
        for (int i = inner_.part(j) + 1; i <= outer_.part(j); ++i) out.push_back({i, j});
    return out;
}

SkewShape SkewShape::conjugate() const {
    return SkewShape(outer_.conjugate(), inner_.conjugate());
}

SkewShape SkewShape::parse(const std::string& text) {
    size_t slash = text.find('/');
    if (text.find('/', slash == std::string::npos ? text.size() : slash + 1) !=
        std::string::npos)
        throw ParseError("more than one '/' in shape '" + text + "'");
    std::string outer_text = slash == std::string::npos ? text : text.substr(0, slash);
    Partition outer(parse_part_list(outer_text));
    Partition inner;
    if (slash != std::string::npos) inner = Partition(parse_part_list(text.substr(slash + 1)));
    return SkewShape(std::move(outer), std::move(inner));
}

std::string SkewShape::to_text() const {
    std::string s = part_list_text(outer_);
    if (inner_.rows() > 0) s += "/" + part_list_text(inner_);
    return s;
}

}  // namespace pedlab
