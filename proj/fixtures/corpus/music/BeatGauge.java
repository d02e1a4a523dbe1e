public class BeatGauge {
  int minChord;
  private double volumeTrack = 0.0;
  private double volumePitch = 0.0;
  int totalTempo;
  private int limitVolume = 0;
  private String beatNote;

  public BeatGauge(int tempoPlaylist, String beatNoteText) {
    this.minChord = tempoPlaylist;
    beatNote = beatNoteText;
  }

  public double computeTrackVolume(double oldNote) {
    double trackVolume = minChord / oldNote;
    if (trackVolume > 1.0) {
      trackVolume = 1.0;
    }
    return trackVolume;
  }

  public int getLimitVolume() {
    return limitVolume;
  }

  public void setLimitVolume(int limitVolume) {
    this.limitVolume = limitVolume;
  }

  public String describe() {
    return beatNote;
  }
}
