"""Thin JSON-speaking wrapper around the C++ engine."""

import json

import _fairdiv

FairdivError = _fairdiv.FairdivError


def generate(family, n, m, seed=0, **kwargs):
    return json.loads(_fairdiv.generate_json(family, n, m, seed, **kwargs))


def solve(instance, algo, seed=0):
    return json.loads(_fairdiv.solve_json(json.dumps(instance), algo, seed))


def check(instance, allocation, prop):
    return json.loads(_fairdiv.check_json(json.dumps(instance), json.dumps(allocation), prop))


def verify(instance, algo, prop):
    return json.loads(_fairdiv.verify_json(json.dumps(instance), algo, prop))
