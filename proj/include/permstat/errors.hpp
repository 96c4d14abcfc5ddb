#pragma once

#include <stdexcept>
#include <string>

namespace permstat {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidPermutation : public Error {
public:
    explicit InvalidPermutation(const std::string& msg) : Error(msg) {}
};

class DuplicateLetter : public Error {
public:
    explicit DuplicateLetter(const std::string& msg) : Error(msg) {}
};

class InvalidOccurrence : public Error {
public:
    explicit InvalidOccurrence(const std::string& msg) : Error(msg) {}
};

class UnsupportedBarredPattern : public Error {
public:
    explicit UnsupportedBarredPattern(const std::string& msg) : Error(msg) {}
};

// Carries the byte offset of the offending token in the original input.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " (at byte " + std::to_string(offset) + ")"),
          raw_(msg),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }
    const std::string& raw() const { return raw_; }

private:
    std::string raw_;
    std::size_t offset_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

class NonIntegerTerm : public Error {
public:
    explicit NonIntegerTerm(const std::string& msg) : Error(msg) {}
};

class NotInClass : public Error {
public:
    explicit NotInClass(const std::string& msg) : Error(msg) {}
};

class NotInSourceClass : public Error {
public:
    explicit NotInSourceClass(const std::string& msg) : Error(msg) {}
};

class InvalidPartition : public Error {
public:
    explicit InvalidPartition(const std::string& msg) : Error(msg) {}
};

class InvalidPath : public Error {
public:
    explicit InvalidPath(const std::string& msg) : Error(msg) {}
};

class ModulusMismatch : public Error {
public:
    explicit ModulusMismatch(const std::string& msg) : Error(msg) {}
};

} // namespace permstat
