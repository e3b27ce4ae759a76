"""Settings of windschitl.

Each module exposes ``get_setting`` / ``set_setting`` made by
:func:`windschitl.setting.make_setting_singleton`.
"""
