#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace smsl {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MalformedExpression : public Error {
public:
    using Error::Error;
};

class InapplicableOperation : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class InvalidDomain : public Error {
public:
    using Error::Error;
};

class EnumerationCapExceeded : public Error {
public:
    EnumerationCapExceeded(std::uint64_t count, std::uint64_t cap)
        : Error("candidate count " + std::to_string(count) + " exceeds enumeration cap " + std::to_string(cap)),
          count_{count}, cap_{cap} {}

    // Saturates at UINT64_MAX for spaces too large to count.
    [[nodiscard]] std::uint64_t count() const { return count_; }
    [[nodiscard]] std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t count_;
    std::uint64_t cap_;
};

// Internal invariant broken (nondeterministic apply, commutation breach...).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " (at byte " + std::to_string(position) + ")"), position_{position} {}

    [[nodiscard]] std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class SchemaError : public Error {
public:
    SchemaError(std::string field, const std::string& reason)
        : Error("schema violation at '" + field + "': " + reason), field_{std::move(field)} {}

    [[nodiscard]] const std::string& field() const { return field_; }

private:
    std::string field_;
};

class ReferenceError : public Error {
public:
    using Error::Error;
};

class InfeasibleLayout : public Error {
public:
    using Error::Error;
};

class SlotOverflow : public Error {
public:
    using Error::Error;
};

class AmbiguousAbstraction : public Error {
public:
    AmbiguousAbstraction(std::string entity, const std::string& reason)
        : Error("cannot abstract entity '" + entity + "': " + reason), entity_{std::move(entity)} {}

    [[nodiscard]] const std::string& entity() const { return entity_; }

private:
    std::string entity_;
};

class AbstractionCollision : public Error {
public:
    using Error::Error;
};

class TemplateError : public Error {
public:
    using Error::Error;
};

class MissingConfig : public Error {
public:
    using Error::Error;
};

} // namespace smsl
