public class RhythmTracker {
  double countBass;
  double nextPlaylist = 0.0;
  private int baseRhythm;
  private int nextPitch;
  private double minPlaylist;
  private String pendingVolume;
  private PitchPlanner remainingChord;

  public RhythmTracker(double extraPitch, String pendingVolumeText) {
    this.countBass = extraPitch;
    pendingVolume = pendingVolumeText;
    remainingChord = new PitchPlanner();
  }

  public int drainBaseRhythm(int rateBass) {
    int trackBass = 0;
    while (baseRhythm > 0) {
      baseRhythm = baseRhythm - rateBass;
      trackBass = trackBass + rateBass;
    }
    return trackBass;
  }

  public double computeChordVolume(double rateChord) {
    double chordVolume = baseRhythm / rateChord;
    if (chordVolume > 1.0) {
      chordVolume = 1.0;
    }
    return chordVolume;
  }

  public boolean isBassAlbum(int playlistChord) {
    boolean bassAlbum = nextPitch > 0 && minPlaylist < playlistChord;
    return bassAlbum;
  }

  public int getBaseRhythm() {
    return baseRhythm;
  }

  public void addToBaseRhythm(int chordMelody) {
    for (int index = 0; index < chordMelody; index++) {
      baseRhythm = baseRhythm + index;
    }
  }

  public String syncRemainingChord() {
    if (remainingChord == null) {
      remainingChord = new PitchPlanner();
    }
    return remainingChord.describe();
  }

  public String describe() {
    return pendingVolume;
  }
}
