#pragma once

#include <stdexcept>
#include <string>

namespace gaelcheck {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input bytes are not valid UTF-8, or a file does not follow its schema.
class FormatError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

// Token has no vowel, so syllables and harmony are undefined.
class UnanalyzableToken : public Error {
public:
    using Error::Error;
};

class ContractViolation : public Error {
public:
    using Error::Error;
};

class AlignmentError : public Error {
public:
    AlignmentError(const std::string& msg, std::size_t sentence)
        : Error(msg), sentence_(sentence) {}
    std::size_t sentence() const { return sentence_; }

private:
    std::size_t sentence_;
};

class GenerationError : public Error {
public:
    using Error::Error;
};

}  // namespace gaelcheck
