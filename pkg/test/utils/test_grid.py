import multiomit
import numpy as np
import pytest


def test_make_grid():
    deltas = multiomit.utils.make_grid()
    if not len(deltas) == 801 or not deltas[0] == 0 or not deltas[-1] == 4:
        raise AssertionError()
    if not np.array_equal(multiomit.utils.make_grid('0:2:5'), np.linspace(0, 2, 5)):
        raise AssertionError()
    if not np.array_equal(multiomit.utils.make_grid({'min': 0, 'max': 2, 'count': 5}), np.linspace(0, 2, 5)):
        raise AssertionError()
    explicit = multiomit.utils.make_grid([0.1, 0.5, 0.7])
    if not np.array_equal(explicit, [0.1, 0.5, 0.7]):
        raise AssertionError()


def test_bad_grids():
    with pytest.raises(multiomit.utils.ParameterError):
        multiomit.utils.make_grid((0, 4, 1))
    with pytest.raises(multiomit.utils.ParameterError):
        multiomit.utils.make_grid((4, 0, 10))
    with pytest.raises(multiomit.utils.ParameterError):
        multiomit.utils.make_grid([0.1, 0.1, 0.2])
    with pytest.raises(multiomit.utils.ConfigError):
        multiomit.utils.parse_grid('0:4')
    with pytest.raises(multiomit.utils.ConfigError):
        multiomit.utils.parse_grid('a:b:c')


def test_error_hierarchy():
    if not issubclass(multiomit.utils.SingularSystemError, multiomit.utils.PoleError):
        raise AssertionError()
    for err in [multiomit.utils.ParameterError, multiomit.utils.ConfigError, multiomit.utils.PoleError,
                multiomit.utils.UnstableDriftError, multiomit.utils.ConvergenceError]:
        if not issubclass(err, ValueError):
            raise AssertionError()
