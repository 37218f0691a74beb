# lamsum - sums of weighted geodesics on a one-holed torus
# This program and the accompanying materials are made available under the
# terms of the Eclipse Public License 2.0 which is available at
# https://www.eclipse.org/legal/epl-2.0/
# SPDX-License-Identifier: EPL-2.0

# @file    words.py
# @author  lamsum developers
# @date    2026-10-18
"""
Words in the free group generated by gamma and delta.

A word is a plain string over the letters g, G (gamma and its inverse)
and d, D (delta and its inverse); the empty string is the identity.
Words are read left to right, so "gd" names gamma*delta.
"""
LETTERS = "gGdD"
INVERSE = {"g": "G", "G": "g", "d": "D", "D": "d"}


class WordError(ValueError):
    pass


def check_word(word):
    for letter in word:
        if letter not in INVERSE:
            raise WordError("invalid letter %r in word %r" % (letter, word))
    return word


def reduce_word(word):
    """Free reduction: cancels adjacent inverse pairs."""
    stack = []
    for letter in check_word(word):
        if stack and stack[-1] == INVERSE[letter]:
            stack.pop()
        else:
            stack.append(letter)
    return "".join(stack)


def is_reduced(word):
    return all(INVERSE[a] != b for a, b in zip(word, word[1:]))


def inverse(word):
    return "".join(INVERSE[letter] for letter in reversed(word))


def multiply(*words):
    return reduce_word("".join(words))


def commutator_word(g, h):
    """h^-1 g^-1 h g, the order used for the boundary element."""
    return multiply(inverse(h), inverse(g), h, g)


def cyclic_reduce(word):
    """Splits a reduced word as u + core + u^-1 with a cyclically reduced core.

    Returns (u, core).
    """
    word = reduce_word(word)
    i = 0
    while len(word) - 2 * i >= 2 and word[i] == INVERSE[word[len(word) - 1 - i]]:
        i += 1
    return word[:i], word[i:len(word) - i]


def cyclic_rotations(word):
    """All pairs (prefix, rotation) with word = prefix + rest and rotation = rest + prefix.

    The rotation equals prefix^-1 * word * prefix.
    """
    return [(word[:i], word[i:] + word[:i]) for i in range(max(1, len(word)))]


def is_cyclic_permutation(a, b):
    return len(a) == len(b) and (not a or b in a + a)


def reduced_words(max_length):
    """All reduced words up to max_length, by length and then in LETTERS order."""
    yield ""
    layer = [""]
    for _ in range(max_length):
        nextLayer = []
        for word in layer:
            for letter in LETTERS:
                if word and word[-1] == INVERSE[letter]:
                    continue
                nextLayer.append(word + letter)
        for word in nextLayer:
            yield word
        layer = nextLayer


def count_reduced_words(max_length):
    return 1 + sum(4 * 3 ** (n - 1) for n in range(1, max_length + 1))


def exponent_sums(word):
    """Abelianization (exponent of gamma, exponent of delta)."""
    return (word.count("g") - word.count("G"), word.count("d") - word.count("D"))


def power_root(word):
    """The shortest u with word = u^k for a cyclically reduced word."""
    for n in range(1, len(word) + 1):
        if len(word) % n == 0 and word[:n] * (len(word) // n) == word:
            return word[:n]
    return word

