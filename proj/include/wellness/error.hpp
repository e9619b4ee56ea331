#pragma once

#include <stdexcept>
#include <string>

namespace wellness {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed instance: bad vertex id, self-loop, empty hyperedge, unknown element.
class InvalidInstance : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Instance has more ground elements than the configured enumeration cap.
class CapExceeded : public Error {
public:
    CapExceeded(std::size_t ground, std::size_t cap)
        : Error("instance has " + std::to_string(ground) + " ground elements, enumeration cap is " +
                std::to_string(cap)),
          ground_(ground), cap_(cap) {}

    std::size_t ground() const noexcept { return ground_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t ground_;
    std::size_t cap_;
};

/// An isolated vertex makes total domination (and open neighborhoods) infeasible.
class IsolatedVertex : public Error {
public:
    explicit IsolatedVertex(int v)
        : Error("vertex " + std::to_string(v) + " is isolated; no total dominating set exists"),
          vertex_(v) {}

    int vertex() const noexcept { return vertex_; }

private:
    int vertex_;
};

/// A universe element that lies in no set cannot be covered.
class UncoverableElement : public Error {
public:
    explicit UncoverableElement(const std::string& name)
        : Error("element '" + name + "' belongs to no set; no set cover exists"), name_(name) {}

    const std::string& element() const noexcept { return name_; }

private:
    std::string name_;
};

/// A construction or query was called outside its precondition.
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

} // namespace wellness
