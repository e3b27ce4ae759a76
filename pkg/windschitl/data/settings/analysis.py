from ...setting import EnvSetting, make_setting_singleton


class AnalysisSetting(EnvSetting):

    _setting_name = "analysis"

    max_workers: int = 1
    '''Grid points evaluated in parallel; 1 means sequential'''
    starvation_threshold: float = 1e-3
    '''Relative lo/hi disagreement that flags a table cell'''
    table_digits: int = 4


get_setting, set_setting = make_setting_singleton(AnalysisSetting.load())
