import pytest

from rachjam import AttackerConfig, DetectorConfig, Scenario, UeConfig, detector_preset


@pytest.fixture
def oai_024():
    return detector_preset("oai", 0.24, delta_db=12.0, initial_threshold_db=17.4)


@pytest.fixture
def flood_scenario(oai_024):
    """Continuous attack with the reference power levels, 64 ROs."""
    return Scenario(
        detector=oai_024,
        attacker=AttackerConfig(period=1, power_db=51.0, early_start=0),
        ue=UeConfig(power_db=56.4),
        noise_db=17.4,
        horizon=64,
    )


def make_scenario(
    alpha=0.0,
    beta=0.24,
    gamma=0.76,
    delta_db=12.0,
    initial_threshold_db=17.4,
    period=1,
    attacker_power_db=51.0,
    early_start=0,
    enabled=True,
    ue_power_db=56.4,
    first_attempt_ro=0,
    max_attempts=None,
    ramp_step_db=0.0,
    noise_db=17.4,
    horizon=64,
    ue_contributes_to_measurement=False,
):
    return Scenario(
        detector=DetectorConfig(
            alpha=alpha,
            beta=beta,
            gamma=gamma,
            delta_db=delta_db,
            initial_threshold_db=initial_threshold_db,
        ),
        attacker=AttackerConfig(
            period=period,
            power_db=attacker_power_db,
            early_start=early_start,
            enabled=enabled,
        ),
        ue=UeConfig(
            power_db=ue_power_db,
            first_attempt_ro=first_attempt_ro,
            max_attempts=max_attempts,
            ramp_step_db=ramp_step_db,
        ),
        noise_db=noise_db,
        horizon=horizon,
        ue_contributes_to_measurement=ue_contributes_to_measurement,
    )
