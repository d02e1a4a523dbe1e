public class BeatRouter {
  private int minPitch;
  private int albumChord = 0;
  private int volume;
  private String minVolume;

  public BeatRouter(int beatChord, String minVolumeText) {
    this.minPitch = beatChord;
    minVolume = minVolumeText;
  }

  public int drainMinPitch(int bassVolume) {
    int minTempo = 0;
    while (minPitch > 0) {
      minPitch = minPitch - bassVolume;
      minTempo = minTempo + bassVolume;
    }
    return minTempo;
  }

  public double computeLastTempo(double chordRhythm) {
    double lastTempo = albumChord / chordRhythm;
    if (lastTempo > 1.0) {
      lastTempo = 1.0;
    }
    return lastTempo;
  }

  public double mergeBaseBeat(double totalPlaylist) {
    double baseBeat = volume * totalPlaylist;
    baseBeat = baseBeat + minPitch;
    return baseBeat;
  }

  public void setMinPitch(int minPitch) {
    this.minPitch = minPitch;
  }

  public String describe() {
    return minVolume;
  }
}
