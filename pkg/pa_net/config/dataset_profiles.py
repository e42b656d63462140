"""
Dataset presets for the fit pipeline.
Each profile fixes the observation window, local-time handling and how the
daily edge rate is measured for one published network.
"""

from pa_net.errors import ConfigError


DATASET_PROFILES = {
    'facebook': {
        'description': 'Facebook wall posts (KONECT facebook-wosn-wall), post-breakpoint segment',
        'window': ('2007-04-08', '2008-05-31'),
        'exclude_hours': (1, 8),
        'tz_offset': -6 * 3600,  # US Central, no DST
        'rate_method': 'interarrival',
        'admin_filter': None,
        'quantile': 0.995,
    },
    'slashdot': {
        'description': 'Slashdot reply network (KONECT slashdot-threads), middle segment',
        'window': ('2005-12-18', '2006-09-02'),
        'exclude_hours': None,
        'tz_offset': 0,
        'rate_method': 'count',
        'admin_filter': None,
        'quantile': 0.995,
    },
    'slashdot-admin': {
        'description': 'Slashdot middle segment with administration accounts removed',
        'window': ('2005-12-18', '2006-09-02'),
        'exclude_hours': None,
        'tz_offset': 0,
        'rate_method': 'count',
        'admin_filter': 20,
        'quantile': 0.995,
    },
}


def get_profile(name: str) -> dict:
    """Return a copy of a named dataset profile."""
    if name not in DATASET_PROFILES:
        raise ConfigError(f"Unknown dataset profile '{name}'. Available: {', '.join(sorted(DATASET_PROFILES))}")
    return dict(DATASET_PROFILES[name])
