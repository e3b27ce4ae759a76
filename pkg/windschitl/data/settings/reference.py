from ...setting import EnvSetting, make_setting_singleton


class ReferenceSetting(EnvSetting):
    '''Gamma oracle tuning'''

    _setting_name = "reference"

    x_min: int = 20
    '''Shift arguments up to at least this before using the Stirling enclosure'''
    max_shift: int = 64
    max_stirling_pairs: int = 32
    '''Largest n of the even/odd Stirling enclosure (4n Bernoulli index)'''
    default_rel_width: float = 1e-40


get_setting, set_setting = make_setting_singleton(ReferenceSetting.load())
