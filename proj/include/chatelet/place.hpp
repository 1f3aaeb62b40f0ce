#pragma once

#include <string>
#include <tuple>

#include "chatelet/errors.hpp"
#include "chatelet/rational.hpp"

namespace chatelet {

// A place of Q: the real place or a finite prime.
struct Place {
    bool real = true;
    Integer p = 0;  // prime when finite

    static Place Real() { return Place{}; }
    static Place Finite(const Integer& prime) {
        if (prime < 2) throw CriterionFails("Place::Finite: " + prime.get_str() + " is not a prime");
        Place pl;
        pl.real = false;
        pl.p = prime;
        return pl;
    }

    bool is_real() const { return real; }
    bool is_finite() const { return !real; }

    std::string str() const { return real ? std::string("Real") : p.get_str(); }

    friend bool operator==(const Place& a, const Place& b) {
        return a.real == b.real && a.p == b.p;
    }
    friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }
    // Real place first, then finite primes in increasing order.
    friend bool operator<(const Place& a, const Place& b) {
        if (a.real != b.real) return a.real;
        return a.p < b.p;
    }
};

// An element of (1/2)Z / Z: the value group of quaternion invariants over Q.
struct Inv2 {
    bool half_ = false;

    static Inv2 zero() { return Inv2{false}; }
    static Inv2 half() { return Inv2{true}; }

    bool is_zero() const { return !half_; }

    friend Inv2 operator+(Inv2 a, Inv2 b) { return Inv2{a.half_ != b.half_}; }
    Inv2& operator+=(Inv2 o) {
        half_ = (half_ != o.half_);
        return *this;
    }
    friend bool operator==(Inv2 a, Inv2 b) { return a.half_ == b.half_; }
    friend bool operator!=(Inv2 a, Inv2 b) { return a.half_ != b.half_; }
    friend bool operator<(Inv2 a, Inv2 b) { return !a.half_ && b.half_; }

    std::string str() const { return half_ ? "1/2" : "0"; }
};

}  // namespace chatelet
