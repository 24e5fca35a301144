#ifndef HYPERSET_TYPES_HPP
#define HYPERSET_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperset {

// Which equality the canonical store works under.  Set mode identifies
// duplicate children (extensional sets, plain bisimulation); Multiset mode
// keeps child multiplicities (counting bisimulation).
enum class Mode : std::uint8_t { Set = 0, Multiset = 1 };

inline const char* mode_name(Mode m) noexcept {
    return m == Mode::Set ? "set" : "multiset";
}

// Index of a node within one ApgSystem.  Dense: 0..n-1.
using NodeId = std::uint32_t;

inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

// Result of comparing two hypersets under the canonical total order.
enum class Ordering { Less, Equal, Greater };

// ── errors ──────────────────────────────────────────────────────────────────

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ModeMismatchError : Error {
    ModeMismatchError() : Error("mode mismatch between hyperset handles") {}
    explicit ModeMismatchError(const std::string& what) : Error(what) {}
};

struct NotAGraphError : Error {
    NotAGraphError() : Error("hyperset is not a graph (some element is not an ordered pair)") {}
};

struct ExponentiationLimitError : Error {
    explicit ExponentiationLimitError(const std::string& what) : Error(what) {}
};

struct DuplicateNameError : Error {
    explicit DuplicateNameError(const std::string& name)
        : Error("duplicate definition of '" + name + "'"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

struct UndefinedNameError : Error {
    explicit UndefinedNameError(const std::string& name)
        : Error("undefined identifier '" + name + "'"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// Syntax error with 1-based source position.
struct ParseError : Error {
    ParseError(const std::string& what, int line, int column)
        : Error(what + " at line " + std::to_string(line) + ", column " +
                std::to_string(column)),
          line_(line),
          column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

// ── HypersetId ──────────────────────────────────────────────────────────────
// An interned handle into the canonical store.  Two handles of the same mode
// are equal as handles exactly when they denote equal hypersets, so == is set
// equality.  Default-constructed handles are invalid until assigned.

class CanonStore;

class HypersetId {
public:
    HypersetId() = default;

    bool valid() const noexcept { return index_ != kInvalid; }
    Mode mode() const noexcept { return mode_; }
    std::uint32_t index() const noexcept { return index_; }

    friend bool operator==(HypersetId a, HypersetId b) noexcept {
        return a.index_ == b.index_;
    }
    friend bool operator!=(HypersetId a, HypersetId b) noexcept {
        return a.index_ != b.index_;
    }

private:
    friend class CanonStore;
    HypersetId(std::uint32_t index, Mode mode) : index_(index), mode_(mode) {}

    static constexpr std::uint32_t kInvalid = static_cast<std::uint32_t>(-1);
    std::uint32_t index_ = kInvalid;
    Mode mode_ = Mode::Set;
};

}  // namespace hyperset

template <>
struct std::hash<hyperset::HypersetId> {
    std::size_t operator()(hyperset::HypersetId h) const noexcept {
        return static_cast<std::size_t>(h.index()) * 0x9e3779b97f4a7c15ull;
    }
};

#endif  // HYPERSET_TYPES_HPP
