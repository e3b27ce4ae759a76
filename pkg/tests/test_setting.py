"""Tests for setting module.
"""

import pytest

from windschitl.setting import EnvSetting, Setting, make_setting_singleton
from windschitl.data.settings.numerics import NumericsSetting


class DemoSetting(EnvSetting):

    _setting_name = "demo"

    precision: int = 256
    width: float = 1e-6
    verbose: bool = False
    label: str = "plain"


class TestSetting:

    def test_defaults_and_overrides(self):
        setting = DemoSetting(precision=512)
        assert setting.precision == 512
        assert setting.label == "plain"
        assert setting.dump_to_dict() == {
            "precision": 512, "width": 1e-6, "verbose": False, "label": "plain",
        }

    def test_unknown_field(self):
        with pytest.raises(ValueError):
            DemoSetting(precison=512)

    def test_fields_inherit(self):

        class Derived(DemoSetting):
            extra: int = 1

        assert list(Derived.fields()) == ["precision", "width", "verbose", "label", "extra"]
        assert issubclass(Derived, Setting)


class TestEnvSetting:

    def test_env_name(self):
        assert DemoSetting.env_name("precision") == "WINDSCHITL_DEMO_PRECISION"

    def test_load(self):
        setting = DemoSetting.load(environ={
            "WINDSCHITL_DEMO_PRECISION": "1024",
            "WINDSCHITL_DEMO_WIDTH": "1",
            "WINDSCHITL_DEMO_VERBOSE": "true",
            "WINDSCHITL_DEMO_LABEL": "fancy",
            "WINDSCHITL_OTHER_PRECISION": "64",
        })
        assert setting.precision == 1024
        assert setting.width == 1.0 and isinstance(setting.width, float)
        assert setting.verbose is True
        assert setting.label == "fancy"

    def test_load_empty(self):
        assert DemoSetting.load(environ={}).dump_to_dict() == DemoSetting().dump_to_dict()

    def test_numerics_defaults(self):
        setting = NumericsSetting.load(environ={})
        assert setting.default_precision_bits == 256
        assert setting.min_precision_bits == 64
        assert setting.max_precision_bits == 4096


def test_make_setting_singleton():
    get_setting, set_setting = make_setting_singleton(DemoSetting())
    first = get_setting()
    assert get_setting() is first
    replaced = DemoSetting(label="replaced")
    set_setting(replaced)
    assert get_setting() is replaced
