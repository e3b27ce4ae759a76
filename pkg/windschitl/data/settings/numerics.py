from ...setting import EnvSetting, make_setting_singleton


class NumericsSetting(EnvSetting):
    '''Working precision and kernel limits'''

    _setting_name = "numerics"

    default_precision_bits: int = 256
    '''Precision used when a caller passes ``None``'''
    min_precision_bits: int = 64
    max_precision_bits: int = 4096
    max_exp_argument: float = float(2 ** 40)
    '''|t| above this makes exp kernels raise RangeError'''
    bernoulli_ceiling: int = 512
    '''Practical ceiling of the Bernoulli table (warned, not enforced)'''
    coefficient_ceiling: int = 64
    '''Practical ceiling of coefficient indices (warned, not enforced)'''


get_setting, set_setting = make_setting_singleton(NumericsSetting.load())
